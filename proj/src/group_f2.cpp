#include "orthoforms/group_f2.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "orthoforms/rational.hpp"

namespace orthoforms {

MatrixF2::MatrixF2(unsigned dimension) : k_(dimension) {
  if (dimension == 0 || dimension > 8)
    throw PreconditionError("matrix dimension must be in 1..8");
}

MatrixF2 MatrixF2::identity(unsigned dimension) {
  MatrixF2 m(dimension);
  for (unsigned i = 0; i < dimension; ++i) m.rows_[i] = std::uint8_t(1u << i);
  return m;
}

MatrixF2 MatrixF2::from_rows(const std::vector<std::vector<int>>& rows) {
  MatrixF2 m(unsigned(rows.size()));
  for (unsigned i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw PreconditionError("matrix rows must be square");
    for (unsigned j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void MatrixF2::set(unsigned i, unsigned j, int v) {
  if (v & 1)
    rows_[i] |= std::uint8_t(1u << j);
  else
    rows_[i] &= std::uint8_t(~(1u << j));
}

MatrixF2 MatrixF2::operator*(const MatrixF2& other) const {
  if (k_ != other.k_) throw PreconditionError("matrix dimension mismatch");
  MatrixF2 r(k_);
  for (unsigned i = 0; i < k_; ++i) {
    std::uint8_t acc = 0;
    std::uint8_t row = rows_[i];
    for (unsigned j = 0; j < k_; ++j)
      if (row & (1u << j)) acc ^= other.rows_[j];
    r.rows_[i] = acc;
  }
  return r;
}

MatrixF2 MatrixF2::transpose() const {
  MatrixF2 r(k_);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) r.set(j, i, get(i, j));
  return r;
}

bool MatrixF2::invertible() const {
  std::array<std::uint8_t, 8> a = rows_;
  unsigned rank = 0;
  for (unsigned col = 0; col < k_; ++col) {
    unsigned pivot = rank;
    while (pivot < k_ && !((a[pivot] >> col) & 1)) ++pivot;
    if (pivot == k_) continue;
    std::swap(a[rank], a[pivot]);
    for (unsigned i = 0; i < k_; ++i)
      if (i != rank && ((a[i] >> col) & 1)) a[i] ^= a[rank];
    ++rank;
  }
  return rank == k_;
}

std::uint64_t MatrixF2::encode() const {
  std::uint64_t code = k_;
  for (unsigned i = 0; i < k_; ++i)
    code |= std::uint64_t(rows_[i]) << (8 * i + 4);
  return code;
}

MatrixF2 MatrixF2::decode(std::uint64_t code, unsigned dimension) {
  MatrixF2 m(dimension);
  for (unsigned i = 0; i < dimension; ++i)
    m.rows_[i] = std::uint8_t((code >> (8 * i + 4)) & 0xff);
  return m;
}

MatrixF2 MatrixF2::direct_sum(const MatrixF2& a, const MatrixF2& b) {
  MatrixF2 m(a.dimension() + b.dimension());
  for (unsigned i = 0; i < a.dimension(); ++i)
    for (unsigned j = 0; j < a.dimension(); ++j) m.set(i, j, a.get(i, j));
  for (unsigned i = 0; i < b.dimension(); ++i)
    for (unsigned j = 0; j < b.dimension(); ++j)
      m.set(a.dimension() + i, a.dimension() + j, b.get(i, j));
  return m;
}

bool preserves_form(const MatrixF2& m, const MatrixF2& gram) {
  if (m.dimension() != gram.dimension())
    throw PreconditionError("form preservation: dimension mismatch");
  return m.transpose() * gram * m == gram;
}

MatrixF2 hyperbolic_plane() { return MatrixF2::from_rows({{0, 1}, {1, 0}}); }

MatrixF2 gram_uu() {
  return MatrixF2::direct_sum(hyperbolic_plane(), hyperbolic_plane());
}

bool GroupClosure::contains(const MatrixF2& m) const {
  return std::binary_search(elements.begin(), elements.end(), m.encode());
}

GroupClosure generate_group(const std::vector<MatrixF2>& generators) {
  if (generators.empty())
    throw PreconditionError("group closure needs at least one generator");
  const unsigned k = generators.front().dimension();
  for (const auto& g : generators) {
    if (g.dimension() != k)
      throw PreconditionError("group closure: mixed dimensions");
    if (!g.invertible())
      throw PreconditionError("group closure: generator is not invertible");
  }

  GroupClosure closure;
  closure.dimension = k;
  closure.generators = generators;

  std::unordered_set<std::uint64_t> seen;
  std::deque<MatrixF2> queue;
  MatrixF2 id = MatrixF2::identity(k);
  seen.insert(id.encode());
  queue.push_back(id);
  while (!queue.empty()) {
    MatrixF2 current = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      MatrixF2 next = current * g;
      if (seen.insert(next.encode()).second) queue.push_back(next);
    }
  }
  closure.elements.assign(seen.begin(), seen.end());
  std::sort(closure.elements.begin(), closure.elements.end());
  closure.order = closure.elements.size();

  for (std::uint64_t code : closure.elements) {
    MatrixF2 m = MatrixF2::decode(code, k);
    unsigned order = 1;
    MatrixF2 power = m;
    while (!(power == id)) {
      power = power * m;
      ++order;
      if (order > closure.order)
        throw Error("element order exceeded the group order");
    }
    closure.order_histogram[order] += 1;
  }
  return closure;
}

bool s6_signature_check(const GroupClosure& closure) {
  return closure.order == 720 &&
         closure.order_histogram == s6_order_histogram_oracle();
}

std::map<unsigned, std::size_t> s6_order_histogram_oracle() {
  std::map<unsigned, std::size_t> hist;
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  do {
    std::array<bool, 6> visited{};
    unsigned order = 1;
    for (int start = 0; start < 6; ++start) {
      if (visited[std::size_t(start)]) continue;
      unsigned len = 0;
      int at = start;
      while (!visited[std::size_t(at)]) {
        visited[std::size_t(at)] = true;
        at = perm[std::size_t(at)];
        ++len;
      }
      order = unsigned(std::lcm(order, len));
    }
    hist[order] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

std::vector<MatrixF2> sp4_f2_generators() {
  // Basis (a1, b1, a2, b2) with Gram U + U. The outer four act inside one
  // hyperbolic plane each (a transvection and the swap per plane); the
  // middle one is the transvection along b1 + a2, the element that mixes
  // the planes. Together they generate the full isometry group.
  return {
      MatrixF2::from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      MatrixF2::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      MatrixF2::from_rows({{1, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 0, 0, 1}}),
      MatrixF2::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
      MatrixF2::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}),
  };
}

std::vector<MatrixF2> extended_generators_6() {
  std::vector<MatrixF2> gens;
  MatrixF2 id2 = MatrixF2::identity(2);
  for (const auto& g : sp4_f2_generators())
    gens.push_back(MatrixF2::direct_sum(g, id2));
  gens.push_back(MatrixF2::direct_sum(MatrixF2::identity(4), hyperbolic_plane()));
  return gens;
}

std::string closure_report_json_text(const GroupClosure& closure) {
  nlohmann::json j;
  j["schema"] = 1;
  j["dimension"] = closure.dimension;
  std::vector<std::string> gen_hashes;
  for (const auto& g : closure.generators) {
    std::uint64_t code = g.encode();
    gen_hashes.push_back(hash_to_hex(fnv1a64(&code, sizeof(code))));
  }
  j["generator_hashes"] = gen_hashes;
  j["order"] = closure.order;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [order, count] : closure.order_histogram)
    hist[std::to_string(order)] = count;
  j["order_histogram"] = hist;
  return j.dump(2);
}

}  // namespace orthoforms
