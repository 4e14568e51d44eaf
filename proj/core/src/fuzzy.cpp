#include "kglit/fuzzy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kglit {

namespace {

std::atomic<uint64_t> g_clamps{0};

constexpr double kClampSlack = 1e-9;

double unit(double v, const char* what) {
  if (v >= 0.0 && v <= 1.0) return v;
  if (v >= -kClampSlack && v <= 1.0 + kClampSlack) {
    if (g_clamps.fetch_add(1) == 0)
      std::fprintf(stderr, "kglit: clamping %s=%.17g to the unit interval\n", what, v);
    return std::clamp(v, 0.0, 1.0);
  }
  throw std::domain_error(std::string(what) + " far outside [0,1]: " + std::to_string(v));
}

}  // namespace

const char* tnorm_name(TNormKind k) {
  switch (k) {
    case TNormKind::Goedel: return "min";
    case TNormKind::Product: return "prod";
    case TNormKind::Lukasiewicz: return "luk";
  }
  return "?";
}

const char* filter_name(FilterKind k) {
  switch (k) {
    case FilterKind::Lt: return "lt";
    case FilterKind::Gt: return "gt";
    case FilterKind::Eq: return "eq";
  }
  return "?";
}

TNormKind tnorm_from_name(const std::string& name) {
  if (name == "min" || name == "goedel") return TNormKind::Goedel;
  if (name == "prod" || name == "product") return TNormKind::Product;
  if (name == "luk" || name == "lukasiewicz") return TNormKind::Lukasiewicz;
  throw std::invalid_argument("unknown t-norm: " + name);
}

FilterKind filter_from_name(const std::string& name) {
  if (name == "lt") return FilterKind::Lt;
  if (name == "gt") return FilterKind::Gt;
  if (name == "eq") return FilterKind::Eq;
  throw std::invalid_argument("unknown filter condition: " + name);
}

double tnorm(TNormKind k, double x, double y) {
  x = unit(x, "tnorm x");
  y = unit(y, "tnorm y");
  switch (k) {
    case TNormKind::Goedel: return std::min(x, y);
    case TNormKind::Product: return x * y;
    case TNormKind::Lukasiewicz: return std::max(0.0, x + y - 1.0);
  }
  return 0.0;
}

double tconorm(TNormKind k, double x, double y) {
  x = unit(x, "tconorm x");
  y = unit(y, "tconorm y");
  return 1.0 - tnorm(k, 1.0 - x, 1.0 - y);
}

double filter_raw(FilterKind k, double c_hat, double c, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("filter_raw requires sigma > 0");
  switch (k) {
    case FilterKind::Eq: return std::exp(-std::abs(c_hat - c) / sigma);
    case FilterKind::Lt: return 1.0 / (1.0 + std::exp((c_hat - c) / sigma));
    case FilterKind::Gt: return 1.0 - 1.0 / (1.0 + std::exp((c_hat - c) / sigma));
  }
  return 0.0;
}

double filter_score(double exists, double raw) {
  return unit(exists, "exists score") * unit(raw, "filter score");
}

uint64_t clamp_count() { return g_clamps.load(); }

}  // namespace kglit
