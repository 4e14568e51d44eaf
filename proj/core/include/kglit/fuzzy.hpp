#pragma once

#include <cstdint>
#include <string>

namespace kglit {

enum class TNormKind { Goedel, Product, Lukasiewicz };
enum class FilterKind { Lt, Gt, Eq };

const char* tnorm_name(TNormKind k);
const char* filter_name(FilterKind k);
TNormKind tnorm_from_name(const std::string& name);   // "min" | "prod" | "luk"
FilterKind filter_from_name(const std::string& name); // "lt" | "gt" | "eq"

// Fuzzy conjunction on [0, 1]. Inputs within 1e-9 outside the unit interval
// are clamped (counted, see clamp_count); anything further out throws.
double tnorm(TNormKind k, double x, double y);

// Complementary disjunction, 1 - tnorm(1-x, 1-y).
double tconorm(TNormKind k, double x, double y);

// Soft filter-condition score for a predicted attribute value c_hat against
// the query constant c, scale sigma > 0:
//   Eq: exp(-|c_hat - c| / sigma)
//   Lt: 1 / (1 + exp((c_hat - c) / sigma))
//   Gt: 1 - Lt
double filter_raw(FilterKind k, double c_hat, double c, double sigma);

// Filter score gated by the attribute-existence likelihood (plain product).
double filter_score(double exists, double raw);

// Number of boundary clamps performed so far (process-wide).
uint64_t clamp_count();

}  // namespace kglit
