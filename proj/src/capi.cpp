#include "steklov/steklov.h"

#include <cstring>
#include <string>

#include "steklov/families.hpp"
#include "steklov/json_io.hpp"
#include "steklov/theorems.hpp"

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

stk_status status_of(steklov::errc code) {
  switch (code) {
    case steklov::errc::parse_error:
      return STK_ERR_PARSE;
    case steklov::errc::singular_interior:
      return STK_ERR_SINGULAR;
    case steklov::errc::tolerance_ambiguity:
      return STK_ERR_TOLERANCE;
    default:
      return STK_ERR_INVALID;
  }
}

template <typename Fn>
stk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error = "ok";
    return STK_OK;
  } catch (const steklov::error& e) {
    g_last_error = std::string(steklov::errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STK_ERR_INTERNAL;
  }
}

steklov::Tolerances tolerances_of(const stk_tolerances* tol) {
  if (!tol) return {};
  return {tol->eig_group_rel, tol->zero_abs, tol->compare_abs};
}

std::vector<int> parse_z_ids(const steklov::Graph& g, const char* z_ids) {
  std::vector<int> out;
  if (!z_ids || !*z_ids) return out;
  std::string text(z_ids);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string id = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
    if (!id.empty()) out.push_back(g.index_of(id));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

steklov::json parse_json(const char* text, const char* what) {
  if (!text) throw steklov::error(steklov::errc::parse_error, std::string(what) + " is null");
  auto j = steklov::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw steklov::error(steklov::errc::parse_error, std::string("malformed ") + what);
  }
  return j;
}

}  // namespace

struct stk_graph {
  steklov::Graph graph;
};

extern "C" {

void stk_default_tolerances(stk_tolerances* out) {
  steklov::Tolerances tol;
  out->eig_group_rel = tol.eig_group_rel;
  out->zero_abs = tol.zero_abs;
  out->compare_abs = tol.compare_abs;
}

const char* stk_last_error(void) { return g_last_error.c_str(); }

void stk_string_free(char* s) { std::free(s); }

void stk_graph_free(stk_graph* g) { delete g; }

stk_status stk_graph_from_json(const char* json_text, stk_graph** out) {
  return guarded([&] {
    if (!json_text || !out) {
      throw steklov::error(steklov::errc::parse_error, "null argument");
    }
    *out = new stk_graph{steklov::graph_from_json_string(json_text)};
  });
}

stk_status stk_graph_to_json(const stk_graph* g, char** out_json) {
  return guarded([&] { *out_json = dup_string(steklov::graph_to_json(g->graph).dump()); });
}

stk_status stk_spectrum_report(const stk_graph* g, const char* z_ids,
                               const stk_tolerances* tol, char** out_json) {
  return guarded([&] {
    auto z = parse_z_ids(g->graph, z_ids);
    *out_json = dup_string(steklov::spectrum_report(g->graph, z, tolerances_of(tol)).dump());
  });
}

stk_status stk_lambda1(const stk_graph* g, const char* z_ids, double* out) {
  return guarded([&] { *out = steklov::lambda1(g->graph, parse_z_ids(g->graph, z_ids)); });
}

stk_status stk_family(const char* family, const char* params_json, char** out_graph_json,
                      char** out_oracle_json) {
  return guarded([&] {
    using steklov::error;
    using steklov::errc;
    auto params = parse_json(params_json ? params_json : "{}", "family parameters");
    std::string kind = family ? family : "";
    auto require_int = [&](const char* key) {
      if (!params.contains(key) || !params[key].is_number_integer()) {
        throw error(errc::bad_parameter, std::string("family needs integer '") + key + "'");
      }
      return params[key].get<int>();
    };
    steklov::Graph g;
    steklov::json oracle = {{"family", kind}, {"params", params}};
    if (kind == "path") {
      int l = require_int("l");
      g = steklov::make_path(l);
      steklov::json sigma = steklov::json::array();
      sigma.push_back(0.0);
      if (l >= 1) sigma.push_back(2.0 / l);
      oracle["sigma"] = sigma;
    } else if (kind == "star") {
      if (!params.contains("arms") || !params["arms"].is_array()) {
        throw error(errc::bad_parameter, "star needs an 'arms' array");
      }
      auto spec = steklov::make_star_spec(params["arms"].get<std::vector<int>>());
      g = steklov::make_star(spec);
      auto closed = steklov::star_spectrum(spec).flatten();
      steklov::json sigma = steklov::json::array();
      for (int i = 0; i < closed.size(); ++i) sigma.push_back(closed[i]);
      oracle["sigma"] = sigma;
      auto z = steklov::star_Z(spec);
      oracle["Z"] = z.z;
      if (z.d >= 0) oracle["d"] = z.d;
      if (z.d == 0) oracle["note"] = "Z criterion holds with d = 0 (Z is the center)";
    } else {
      steklov::ClosedFormSpectrum closed;
      if (kind == "regular-star") {
        int r = require_int("r"), l = require_int("l");
        g = steklov::make_regular_star(r, l);
        closed = steklov::regular_star_spectrum(r, l);
      } else if (kind == "comb") {
        int r = require_int("r"), l = require_int("l");
        g = steklov::make_regular_comb(r, l);
        closed = steklov::regular_comb_spectrum(r, l);
      } else if (kind == "tree-ball") {
        int r = require_int("r"), d = require_int("d");
        g = steklov::make_tree_ball(r, d);
        closed = steklov::tree_ball_spectrum(r, d);
      } else {
        throw error(errc::bad_parameter, "unknown family '" + kind + "'");
      }
      auto flat = closed.flatten();
      steklov::json sigma = steklov::json::array();
      for (int i = 0; i < flat.size(); ++i) sigma.push_back(flat[i]);
      oracle["sigma"] = sigma;
    }
    if (out_graph_json) *out_graph_json = dup_string(steklov::graph_to_json(g).dump());
    if (out_oracle_json) *out_oracle_json = dup_string(oracle.dump());
  });
}

stk_status stk_verify(const char* kind, const char* request_json, const stk_tolerances* tol,
                      char** out_report_json, int* out_verdict) {
  return guarded([&] {
    using steklov::error;
    using steklov::errc;
    auto request = parse_json(request_json, "verify request");
    auto tols = tolerances_of(tol);
    std::string k = kind ? kind : "";
    auto graph_field = [&](const char* key) {
      if (!request.contains(key)) {
        throw error(errc::parse_error, std::string("request needs '") + key + "'");
      }
      return steklov::graph_from_json(request[key]);
    };
    auto string_field = [&](const char* key) {
      if (!request.contains(key) || !request[key].is_string()) {
        throw error(errc::parse_error, std::string("request needs string '") + key + "'");
      }
      return request[key].get<std::string>();
    };
    steklov::VerdictReport report;
    if (k == "mono") {
      report = steklov::verify_monotonicity(graph_field("ambient"), graph_field("base"), tols);
    } else if (k == "mono-homotopy") {
      report = steklov::verify_monotonicity_homotopy(graph_field("ambient"), graph_field("base"),
                                                     tols);
    } else if (k == "rigidity") {
      report = steklov::verify_rigidity_full(graph_field("ambient"), graph_field("base"), tols);
    } else if (k == "rigidity-geometric") {
      report = steklov::verify_rigidity_geometric(graph_field("ambient"), graph_field("base"),
                                                  tols);
    } else if (k == "rigidity-sigma2") {
      report = steklov::verify_rigidity_sigma2(graph_field("ambient"), graph_field("base"), tols);
    } else if (k == "rigidity-sym") {
      if (!request.contains("r") || !request["r"].is_number_integer()) {
        throw error(errc::parse_error, "request needs integer 'r'");
      }
      report = steklov::verify_symmetric_rigidity(graph_field("gamma"), string_field("z"),
                                                  request["r"].get<int>(), graph_field("tooth"),
                                                  string_field("tooth_z"), tols);
    } else if (k == "wedge") {
      report = steklov::verify_wedge_identity(graph_field("graph"), string_field("z"), tols);
    } else if (k == "estimate") {
      steklov::EstimateParams params;
      if (request.contains("params")) {
        const auto& p = request["params"];
        if (p.contains("r")) params.r = p["r"].get<int>();
        if (p.contains("l")) params.l = p["l"].get<int>();
        if (p.contains("d")) params.d = p["d"].get<int>();
        if (p.contains("arms")) params.arm_lengths = p["arms"].get<std::vector<int>>();
      }
      std::unordered_map<std::string, std::string> cert;
      if (request.contains("certificate")) {
        for (auto it = request["certificate"].begin(); it != request["certificate"].end(); ++it) {
          cert[it.key()] = it.value().get<std::string>();
        }
      }
      report = steklov::verify_estimates(string_field("kind"), params, graph_field("graph"),
                                         cert, tols);
    } else {
      throw error(errc::bad_parameter, "unknown verify kind '" + k + "'");
    }
    if (out_report_json) *out_report_json = dup_string(report.to_json().dump());
    if (out_verdict) {
      *out_verdict = report.verdict == "pass" ? 0 : report.verdict == "fail" ? 1 : 2;
    }
  });
}

stk_status stk_fuzz(const char* config_json, const stk_tolerances* tol, char** out_report_json,
                    int* out_violations) {
  return guarded([&] {
    auto j = parse_json(config_json ? config_json : "{}", "fuzz config");
    steklov::FuzzConfig config;
    config.tol = tolerances_of(tol);
    if (j.contains("trials")) config.trials = j["trials"].get<int>();
    if (j.contains("max_vertices")) config.max_vertices = j["max_vertices"].get<int>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("weighted")) config.weighted = j["weighted"].get<bool>();
    if (j.contains("plant_bug")) config.plant_bug = j["plant_bug"].get<bool>();
    auto result = steklov::fuzz(config);
    if (out_report_json) *out_report_json = dup_string(result.report.dump());
    if (out_violations) *out_violations = result.violations;
  });
}

stk_status stk_selftest(const stk_tolerances* tol, char** out_report_json, int* out_failures) {
  return guarded([&] {
    auto result = steklov::selftest(tolerances_of(tol));
    if (out_report_json) *out_report_json = dup_string(result.report.dump());
    if (out_failures) *out_failures = result.violations;
  });
}

}  // extern "C"
