#include "crbuilding.h"

#include <cstring>
#include <string>

#include "scenario.hpp"

using crb::Errc;
using crb::Error;

struct crb_scenario {
  crb::Scenario sc;
};

struct crb_report {
  nlohmann::json report;
  std::string json_text;
  bool consistent = false;
};

struct crb_building {
  const crb::Building* b;  // owned
};

namespace {

void put_error(char* err, size_t err_len, const std::string& msg) {
  if (!err || err_len == 0) return;
  size_t n = std::min(err_len - 1, msg.size());
  std::memcpy(err, msg.data(), n);
  err[n] = '\0';
}

crb_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
      return CRB_ERR_INVALID_ARGUMENT;
    case Errc::parse:
      return CRB_ERR_PARSE;
    case Errc::cap_exceeded:
      return CRB_ERR_CAP_EXCEEDED;
    case Errc::singular:
      return CRB_ERR_SINGULAR;
    case Errc::precondition:
      return CRB_ERR_PRECONDITION;
    case Errc::invariant:
      return CRB_ERR_INVARIANT;
    case Errc::io:
      return CRB_ERR_IO;
    default:
      return CRB_ERR_INTERNAL;
  }
}

template <typename Fn>
crb_status guarded(char* err, size_t err_len, Fn&& fn) {
  try {
    fn();
    return CRB_OK;
  } catch (const Error& e) {
    put_error(err, err_len, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    put_error(err, err_len, e.what());
    return CRB_ERR_INTERNAL;
  } catch (...) {
    put_error(err, err_len, "unknown error");
    return CRB_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* crb_version(void) { return crb::kToolVersion; }

void crb_options_init(crb_options* opts) {
  if (!opts) return;
  crb::Caps defaults;
  opts->cap_order = defaults.order;
  opts->cap_subspaces = defaults.subspaces;
  opts->cap_corpus_group = defaults.corpus_group;
  opts->seed = 0;
}

crb_status crb_scenario_parse(const char* text, crb_scenario** out, char* err, size_t err_len) {
  if (!text || !out) {
    put_error(err, err_len, "null argument");
    return CRB_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] { *out = new crb_scenario{crb::parse_scenario(text)}; });
}

crb_status crb_scenario_parse_file(const char* path, crb_scenario** out, char* err, size_t err_len) {
  if (!path || !out) {
    put_error(err, err_len, "null argument");
    return CRB_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] { *out = new crb_scenario{crb::parse_scenario_file(path)}; });
}

const char* crb_scenario_id(const crb_scenario* s) { return s ? s->sc.id.c_str() : ""; }
const char* crb_scenario_analysis(const crb_scenario* s) { return s ? s->sc.analysis.c_str() : ""; }
void crb_scenario_free(crb_scenario* s) { delete s; }

crb_status crb_run(const crb_scenario* s, const crb_options* opts, crb_report** out, char* err,
                   size_t err_len) {
  if (!s || !out) {
    put_error(err, err_len, "null argument");
    return CRB_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] {
    crb::Caps caps;
    unsigned long long seed = 0;
    if (opts) {
      caps.order = opts->cap_order;
      caps.subspaces = opts->cap_subspaces;
      caps.corpus_group = opts->cap_corpus_group;
      seed = opts->seed;
    }
    auto rep = std::make_unique<crb_report>();
    rep->report = crb::run_scenario(s->sc, caps, seed);
    rep->json_text = rep->report.dump(2) + "\n";
    rep->consistent = crb::report_consistent(rep->report);
    *out = rep.release();
  });
}

const char* crb_report_json(const crb_report* r) { return r ? r->json_text.c_str() : ""; }
int crb_report_consistent(const crb_report* r) { return r && r->consistent ? 1 : 0; }
void crb_report_free(crb_report* r) { delete r; }

crb_status crb_building_build(int n, int p, int m, long long cap_simplices, crb_building** out,
                              char* err, size_t err_len) {
  if (!out) {
    put_error(err, err_len, "null argument");
    return CRB_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] {
    const crb::Field& F = crb::Field::get(p, m);
    auto* b = new crb::Building(F, n, cap_simplices);
    *out = new crb_building{b};
  });
}

long long crb_building_vertex_count(const crb_building* b) {
  return b ? (long long)b->b->vertices().size() : 0;
}
long long crb_building_chamber_count(const crb_building* b) { return b ? b->b->chamber_count() : 0; }
long long crb_building_simplex_count(const crb_building* b) {
  return b ? (long long)b->b->flags().size() : 0;
}
void crb_building_free(crb_building* b) {
  if (!b) return;
  delete b->b;
  delete b;
}

}  // extern "C"
