#include "orthoforms/hilbert.hpp"

#include <json.hpp>

namespace orthoforms {

PowerSeries PowerSeries::one(unsigned n) {
  PowerSeries s;
  s.truncation = n;
  s.c.assign(n + 1, 0);
  s.c[0] = 1;
  return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.truncation != b.truncation)
    throw DegreeError("series product with mismatched truncation");
  PowerSeries r;
  r.truncation = a.truncation;
  r.c.assign(a.truncation + 1, 0);
  for (unsigned i = 0; i <= a.truncation; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; i + j <= b.truncation; ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

bool series_equal(const PowerSeries& a, const PowerSeries& b) {
  if (a.truncation != b.truncation)
    throw DegreeError("series comparison with mismatched truncation");
  return a.c == b.c;
}

PowerSeries hilbert_from_rational(const WeightedPresentation& p, unsigned n) {
  for (unsigned w : p.free_weights)
    if (w == 0) throw PreconditionError("generator weights must be positive");
  for (unsigned w : p.sqrt_weights)
    if (w == 0) throw PreconditionError("generator weights must be positive");

  PowerSeries s = PowerSeries::one(n);
  // Numerator: product of (1 - T^r).
  auto apply_relation = [&](unsigned r) {
    if (r == 0) throw PreconditionError("relation weights must be positive");
    for (unsigned k = n; k + 1 > r; --k) s.c[k] -= s.c[k - r];
  };
  for (unsigned r : p.relation_weights) apply_relation(r);
  for (unsigned w : p.sqrt_weights) apply_relation(2 * w);
  // Denominator: divide by each (1 - T^w), i.e. multiply by the geometric
  // series via the prefix recurrence c[k] += c[k - w].
  auto apply_generator = [&](unsigned w) {
    for (unsigned k = w; k <= n; ++k) s.c[k] += s.c[k - w];
  };
  for (unsigned w : p.free_weights) apply_generator(w);
  for (unsigned w : p.sqrt_weights) apply_generator(w);
  return s;
}

namespace {

void enumerate_free(const std::vector<unsigned>& weights, std::size_t idx,
                    unsigned long used, unsigned n, unsigned base,
                    std::vector<long long>& counts) {
  if (idx == weights.size()) {
    counts[base + used] += 1;
    return;
  }
  for (unsigned long total = used; total <= n; total += weights[idx])
    enumerate_free(weights, idx + 1, total, n, base, counts);
}

}  // namespace

PowerSeries hilbert_from_counting(const WeightedPresentation& p, unsigned n) {
  if (!p.relation_weights.empty())
    throw PreconditionError(
        "counting oracle handles square-root relations only");
  for (unsigned w : p.free_weights)
    if (w == 0) throw PreconditionError("generator weights must be positive");
  if (p.sqrt_weights.size() > 20)
    throw PreconditionError("too many square-root generators to enumerate");

  PowerSeries s;
  s.truncation = n;
  s.c.assign(n + 1, 0);

  // Every subset of square-root generators contributes its weight sum as an
  // offset; free generators are enumerated exhaustively on top.
  const std::size_t subsets = std::size_t(1) << p.sqrt_weights.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    unsigned long offset = 0;
    for (std::size_t b = 0; b < p.sqrt_weights.size(); ++b)
      if (mask & (std::size_t(1) << b)) offset += p.sqrt_weights[b];
    if (offset > n) continue;
    enumerate_free(p.free_weights, 0, 0, n - unsigned(offset), unsigned(offset), s.c);
  }
  return s;
}

WeightedPresentation characters_ring_presentation() {
  return {{4, 6, 8, 10, 12}, {4, 10, 30}, {}};
}

WeightedPresentation gamma1_ring_presentation() {
  return {{4, 6, 8, 10, 12}, {10}, {}};
}

WeightedPresentation vinberg_ring_presentation() {
  return {{4, 6, 8, 10, 12}, {}, {}};
}

bool character_factor_check(unsigned n) {
  PowerSeries tilde = hilbert_from_rational(characters_ring_presentation(), n);
  PowerSeries base = hilbert_from_rational(gamma1_ring_presentation(), n);
  PowerSeries factor;
  factor.truncation = n;
  factor.c.assign(n + 1, 0);
  factor.c[0] = 1;
  if (n >= 4) factor.c[4] += 1;
  if (n >= 30) factor.c[30] += 1;
  if (n >= 34) factor.c[34] += 1;
  return series_equal(tilde, series_mul(base, factor));
}

std::string series_to_json_text(const PowerSeries& s, const WeightedPresentation& p,
                                const std::string& label) {
  nlohmann::json j;
  j["schema"] = 1;
  j["label"] = label;
  j["presentation"] = {{"free_weights", p.free_weights},
                       {"sqrt_weights", p.sqrt_weights},
                       {"relation_weights", p.relation_weights}};
  j["truncation"] = s.truncation;
  j["coefficients"] = s.c;
  return j.dump(2);
}

}  // namespace orthoforms
