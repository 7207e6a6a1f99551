#include "thetalgr/thetalgr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "thetalgr/error.hpp"
#include "thetalgr/json_io.hpp"
#include "thetalgr/lagrangian.hpp"
#include "thetalgr/sampling.hpp"
#include "thetalgr/symplectic.hpp"
#include "thetalgr/verify.hpp"

struct tl_point {
  thetalgr::LagrangianPoint point;
};

namespace {

using thetalgr::Json;

thread_local std::string last_error;

tl_status fail(tl_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

tl_status status_of(thetalgr::ErrorCode c) {
  switch (c) {
    case thetalgr::ErrorCode::kParse: return TL_PARSE_ERROR;
    case thetalgr::ErrorCode::kInvariant: return TL_INVARIANT_VIOLATION;
    case thetalgr::ErrorCode::kDomain: return TL_DOMAIN_ERROR;
  }
  return TL_INTERNAL_ERROR;
}

template <class F>
tl_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const thetalgr::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(TL_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tl_status null_arg(const char* what) {
  return fail(TL_DOMAIN_ERROR, std::string(what) + " must not be null");
}

Json subsets_json(const std::vector<thetalgr::Subset>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(thetalgr::to_json(s));
  return out;
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "1.0.0"; }

const char* tl_last_error(void) { return last_error.c_str(); }

void tl_string_free(char* s) { std::free(s); }

tl_status tl_point_from_json(const char* json, tl_point** out) {
  if (json == nullptr || out == nullptr) return null_arg("json and out");
  *out = nullptr;
  return guarded([&] {
    auto p = thetalgr::point_from_json(thetalgr::parse_json(json));
    *out = new tl_point{std::move(p)};
    return TL_OK;
  });
}

tl_status tl_point_to_json(const tl_point* p, char** out) {
  if (p == nullptr || out == nullptr) return null_arg("point and out");
  return guarded([&] {
    *out = dup(thetalgr::to_json(p->point).dump());
    return TL_OK;
  });
}

void tl_point_free(tl_point* p) { delete p; }

int tl_point_rank(const tl_point* p) { return p == nullptr ? 0 : p->point.rank(); }

tl_status tl_classify(const tl_point* p, char** out_json) {
  if (p == nullptr || out_json == nullptr) return null_arg("point and out_json");
  return guarded([&] {
    Json j = thetalgr::to_json(thetalgr::classify(p->point));
    j["theta"] = thetalgr::to_string(thetalgr::theta_class(p->point));
    j["plucker_class"] = thetalgr::to_string(thetalgr::plucker_sign_class(p->point));
    j["gs_list"] = subsets_json(thetalgr::gs_list(p->point));
    *out_json = dup(j.dump());
    return TL_OK;
  });
}

tl_status tl_plucker(const tl_point* p, char** out_json) {
  if (p == nullptr || out_json == nullptr) return null_arg("point and out_json");
  return guarded([&] {
    const auto v = thetalgr::plucker(p->point);
    const Json j = {{"coords", thetalgr::to_json(v)},
                    {"class", thetalgr::to_string(thetalgr::plucker_sign_class(v))},
                    {"gs_list", subsets_json(thetalgr::gs_list(p->point))}};
    *out_json = dup(j.dump());
    return TL_OK;
  });
}

tl_status tl_flow(const tl_point* p, const char* c, tl_point** out) {
  if (p == nullptr || c == nullptr || out == nullptr) return null_arg("point, c and out");
  *out = nullptr;
  return guarded([&] {
    auto q = thetalgr::flow(thetalgr::parse_rational(c), p->point);
    *out = new tl_point{std::move(q)};
    return TL_OK;
  });
}

tl_status tl_sample_stratum(int n, int k, int l, uint64_t seed, size_t count, char** out_jsonl) {
  if (out_jsonl == nullptr) return null_arg("out_jsonl");
  return guarded([&] {
    thetalgr::base_point(k, l, n);  // validates (k, l, n)
    thetalgr::Rng rng(seed);
    std::string text;
    for (size_t i = 0; i < count; ++i) {
      const auto p = thetalgr::sample_double(rng, k, l, n);
      const auto kl = thetalgr::classify_double(p);
      if (kl.k != k || kl.l != l || !thetalgr::is_theta_nonnegative(p)) {
        thetalgr::throw_invariant("sampled point left its stratum");
      }
      text += thetalgr::to_json(p).dump();
      text += '\n';
    }
    *out_jsonl = dup(text);
    return TL_OK;
  });
}

tl_status tl_sample_cell(int n, const int* cell, size_t len, uint64_t seed, size_t count,
                         char** out_jsonl) {
  if (out_jsonl == nullptr || (cell == nullptr && len > 0)) return null_arg("cell and out_jsonl");
  return guarded([&] {
    const thetalgr::CosetIndex k(std::vector<int>(cell, cell + len));
    thetalgr::Rng rng(seed);
    std::string text;
    for (size_t i = 0; i < count; ++i) {
      const auto s = thetalgr::sample_cell(rng, k, n);
      if (thetalgr::cell_index(s.point) != k) {
        thetalgr::throw_invariant("sampled point left its cell");
      }
      text += thetalgr::to_json(s.point).dump();
      text += '\n';
    }
    *out_jsonl = dup(text);
    return TL_OK;
  });
}

tl_status tl_factor(const char* matrix_json, char** out_json) {
  if (matrix_json == nullptr || out_json == nullptr) return null_arg("matrix_json and out_json");
  return guarded([&] {
    const thetalgr::Matrix m = thetalgr::matrix_from_json(thetalgr::parse_json(matrix_json));
    if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) {
      thetalgr::throw_parse("group element must be a 2n x 2n matrix");
    }
    const thetalgr::SymplecticElement g(m);
    if (!thetalgr::is_in_theta_monoid(g)) {
      thetalgr::throw_domain("element is not in the theta-nonnegative monoid");
    }
    const auto f = thetalgr::theta_triple_factor(g);
    const Json j = {{"lower", thetalgr::to_json(f.lower.matrix())},
                    {"levi", thetalgr::to_json(f.levi.matrix())},
                    {"upper", thetalgr::to_json(f.upper.matrix())},
                    {"exact", f.lower * f.levi * f.upper == g}};
    *out_json = dup(j.dump());
    return TL_OK;
  });
}

tl_status tl_verify(const char* suite, int n, uint64_t seed, long count, double tolerance,
                    char** out_json) {
  if (suite == nullptr || out_json == nullptr) return null_arg("suite and out_json");
  return guarded([&] {
    thetalgr::VerifyConfig cfg{n, seed, count, tolerance};
    const auto report = thetalgr::run_suite(suite, cfg);
    *out_json = dup(thetalgr::to_json(report).dump());
    if (!report.passed) return fail(TL_PROPERTY_FAILED, report.failed_property);
    return TL_OK;
  });
}

const char* tl_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : thetalgr::suite_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
