#include "fgb.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "fgb/boundary.hpp"
#include "fgb/commands.hpp"
#include "fgb/level_function.hpp"
#include "fgb/quotient.hpp"
#include "fgb/word.hpp"

struct fgb_word {
  fgb::ReducedWord value;
};
struct fgb_point {
  fgb::BoundaryPoint value;
};
struct fgb_levelfn {
  fgb::LevelFunction value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown"; }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fgb_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FGB_ERR_ARGUMENT;
  } catch (const std::bad_alloc& e) {
    set_error(e.what());
    return FGB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FGB_ERR_INTERNAL;
  }
}

fgb_status require(bool cond, const char* message) {
  if (!cond) {
    set_error(message);
    return FGB_ERR_ARGUMENT;
  }
  return FGB_OK;
}

fgb_status run_command(fgb::CommandResult (*runner)(const nlohmann::json&),
                       const char* config_json, char** report_out) {
  if (fgb_status s = require(config_json && report_out, "null argument"))
    return s;
  return guard([&]() -> fgb_status {
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      set_error(e.what());
      return FGB_ERR_PARSE;
    }
    fgb::CommandResult res = runner(cfg);
    *report_out = dup_string(res.output);
    if (res.exit_code == 0) return FGB_OK;
    if (res.exit_code == 2) return FGB_ERR_NOT_STABILIZED;
    set_error(res.output.c_str());
    return FGB_ERR_ARGUMENT;
  });
}

}  // namespace

extern "C" {

const char* fgb_last_error(void) { return g_last_error.c_str(); }

void fgb_string_free(char* s) { delete[] s; }

fgb_status fgb_word_parse(int rank, const char* text, fgb_word** out) {
  if (fgb_status s = require(text && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    try {
      *out = new fgb_word{fgb::ReducedWord::parse(rank, text)};
    } catch (const std::invalid_argument& e) {
      set_error(e.what());
      return FGB_ERR_PARSE;
    }
    return FGB_OK;
  });
}

fgb_status fgb_word_format(const fgb_word* w, char** out) {
  if (fgb_status s = require(w && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = dup_string(w->value.str());
    return FGB_OK;
  });
}

void fgb_word_free(fgb_word* w) { delete w; }

fgb_status fgb_word_multiply(const fgb_word* x, const fgb_word* y,
                             fgb_word** out) {
  if (fgb_status s = require(x && y && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_word{fgb::multiply(x->value, y->value)};
    return FGB_OK;
  });
}

fgb_status fgb_word_inverse(const fgb_word* x, fgb_word** out) {
  if (fgb_status s = require(x && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_word{fgb::inverse(x->value)};
    return FGB_OK;
  });
}

long long fgb_word_length(const fgb_word* x) {
  return x ? static_cast<long long>(x->value.length()) : -1;
}

fgb_status fgb_gromov_product(const fgb_word* y, const fgb_word* z,
                              const fgb_word* base, long long* out) {
  if (fgb_status s = require(y && z && base && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = fgb::gromov_product(y->value, z->value, base->value);
    return FGB_OK;
  });
}

fgb_status fgb_point_parse(int rank, const char* text, fgb_point** out) {
  if (fgb_status s = require(text && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    try {
      *out = new fgb_point{fgb::BoundaryPoint::parse(rank, text)};
    } catch (const std::invalid_argument& e) {
      set_error(e.what());
      return FGB_ERR_PARSE;
    }
    return FGB_OK;
  });
}

fgb_status fgb_point_format(const fgb_point* x, char** out) {
  if (fgb_status s = require(x && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = dup_string(x->value.str());
    return FGB_OK;
  });
}

void fgb_point_free(fgb_point* x) { delete x; }

fgb_status fgb_limit_point(const fgb_word* w, int sign, fgb_point** out) {
  if (fgb_status s = require(w && out && sign != 0, "null or zero argument"))
    return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_point{
        fgb::limit_point(w->value, sign > 0 ? fgb::Sign::plus : fgb::Sign::minus)};
    return FGB_OK;
  });
}

fgb_status fgb_act(const fgb_word* g, const fgb_point* x, fgb_point** out) {
  if (fgb_status s = require(g && x && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_point{fgb::act(g->value, x->value)};
    return FGB_OK;
  });
}

fgb_status fgb_point_prefix(const fgb_point* x, int n, fgb_word** out) {
  if (fgb_status s = require(x && out && n >= 0, "null or negative argument"))
    return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_word{fgb::point_prefix(x->value, static_cast<std::size_t>(n))};
    return FGB_OK;
  });
}

fgb_status fgb_is_fixed(const fgb_word* g, const fgb_point* x, int* out) {
  if (fgb_status s = require(g && x && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = fgb::is_fixed(g->value, x->value) ? 1 : 0;
    return FGB_OK;
  });
}

fgb_status fgb_related(int rank, const char* x_text, const char* y_text,
                       const char* relation, int* out) {
  if (fgb_status s = require(x_text && y_text && relation && out,
                             "null argument"))
    return s;
  return guard([&]() -> fgb_status {
    try {
      fgb::BoundaryPoint x = fgb::BoundaryPoint::parse(rank, x_text);
      fgb::BoundaryPoint y = fgb::BoundaryPoint::parse(rank, y_text);
      fgb::RelationSpec spec = fgb::RelationSpec::parse(rank, relation);
      *out = fgb::related(x, y, spec) ? 1 : 0;
    } catch (const std::invalid_argument& e) {
      set_error(e.what());
      return FGB_ERR_PARSE;
    }
    return FGB_OK;
  });
}

fgb_status fgb_cylinder_p(const fgb_word* w, fgb_levelfn** out) {
  if (fgb_status s = require(w && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_levelfn{fgb::LevelFunction::cylinder_p(w->value)};
    return FGB_OK;
  });
}

fgb_status fgb_cylinder_q(const fgb_word* w, fgb_levelfn** out) {
  if (fgb_status s = require(w && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_levelfn{fgb::LevelFunction::cylinder_q(w->value)};
    return FGB_OK;
  });
}

void fgb_levelfn_free(fgb_levelfn* f) { delete f; }

fgb_status fgb_levelfn_translate(const fgb_word* g, const fgb_levelfn* f,
                                 fgb_levelfn** out) {
  if (fgb_status s = require(g && f && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = new fgb_levelfn{f->value.translated(g->value)};
    return FGB_OK;
  });
}

fgb_status fgb_levelfn_evaluate(const fgb_levelfn* f, const fgb_point* x,
                                long long* out) {
  if (fgb_status s = require(f && x && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = static_cast<long long>(f->value.evaluate(x->value));
    return FGB_OK;
  });
}

fgb_status fgb_levelfn_to_json(const fgb_levelfn* f, char** out) {
  if (fgb_status s = require(f && out, "null argument")) return s;
  return guard([&]() -> fgb_status {
    *out = dup_string(f->value.to_json());
    return FGB_OK;
  });
}

fgb_status fgb_run_kgroup(const char* config_json, char** report_out) {
  return run_command(fgb::run_kgroup, config_json, report_out);
}
fgb_status fgb_run_verify(const char* config_json, char** report_out) {
  return run_command(fgb::run_verify, config_json, report_out);
}
fgb_status fgb_run_witness(const char* config_json, char** report_out) {
  return run_command(fgb::run_witness, config_json, report_out);
}
fgb_status fgb_run_orbits(const char* config_json, char** report_out) {
  return run_command(fgb::run_orbits, config_json, report_out);
}
fgb_status fgb_run_act(const char* config_json, char** report_out) {
  return run_command(fgb::run_act, config_json, report_out);
}

}  // extern "C"
