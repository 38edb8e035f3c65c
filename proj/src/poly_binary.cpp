#include "orthoforms/poly_binary.hpp"

#include <cstring>

namespace orthoforms {

namespace {

constexpr char kMagic[4] = {'O', 'F', 'P', 'B'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}
void put_i64(std::vector<std::uint8_t>& out, std::int64_t v) {
  put_u64(out, std::uint64_t(v));
}

void put_magnitude(std::vector<std::uint8_t>& out, const mpz_class& z) {
  int sign = mpz_sgn(z.get_mpz_t());
  out.push_back(std::uint8_t(std::int8_t(sign)));
  std::size_t count = 0;
  std::vector<std::uint64_t> limbs;
  if (sign != 0) {
    limbs.resize((mpz_sizeinbase(z.get_mpz_t(), 2) + 63) / 64);
    mpz_export(limbs.data(), &count, -1, 8, -1, 0, z.get_mpz_t());
    limbs.resize(count);
  }
  put_u32(out, std::uint32_t(limbs.size()));
  for (auto limb : limbs) put_u64(out, limb);
}

class Reader {
public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : b_(bytes) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(b_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b_[pos_++]) << (8 * i);
    return v;
  }
  std::int64_t i64() { return std::int64_t(u64()); }
  std::string str(std::size_t len) {
    need(len);
    std::string s(reinterpret_cast<const char*>(b_.data() + pos_), len);
    pos_ += len;
    return s;
  }
  mpz_class magnitude() {
    need(1);
    auto sign = std::int8_t(b_[pos_++]);
    std::uint32_t nlimbs = u32();
    if (nlimbs > (1u << 24)) throw FormatError("binary polynomial: limb count");
    std::vector<std::uint64_t> limbs(nlimbs);
    for (auto& limb : limbs) limb = u64();
    mpz_class z(0);
    if (sign != 0 && nlimbs > 0)
      mpz_import(z.get_mpz_t(), limbs.size(), -1, 8, -1, 0, limbs.data());
    if (sign < 0) z = -z;
    if ((sign == 0) != (z == 0))
      throw FormatError("binary polynomial: sign/magnitude mismatch");
    return z;
  }
  std::size_t pos() const { return pos_; }
  std::size_t size() const { return b_.size(); }
  bool at_end() const { return pos_ == b_.size(); }

private:
  void need(std::size_t n) {
    if (pos_ + n > b_.size()) throw FormatError("binary polynomial: truncated");
  }
  const std::vector<std::uint8_t>& b_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> poly_to_binary(const Polynomial& f) {
  const VariableSpace& sp = *f.space();
  std::vector<std::uint8_t> payload;
  put_u32(payload, std::uint32_t(sp.size()));
  for (std::size_t i = 0; i < sp.size(); ++i) {
    put_u32(payload, std::uint32_t(sp.name(i).size()));
    for (char c : sp.name(i)) payload.push_back(std::uint8_t(c));
    put_i64(payload, sp.weight(i));
  }
  put_u64(payload, f.term_count());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < sp.size(); ++i) put_u32(payload, t.mono.exp(i));
    put_magnitude(payload, t.coeff.get_num());
    put_magnitude(payload, t.coeff.get_den());
  }

  std::vector<std::uint8_t> out;
  out.reserve(payload.size() + 16);
  for (char c : kMagic) out.push_back(std::uint8_t(c));
  put_u32(out, kVersion);
  put_u64(out, fnv1a64(payload.data(), payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Polynomial poly_from_binary(const std::vector<std::uint8_t>& bytes, SpacePtr space) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("binary polynomial: bad magic");
  Reader r(bytes);
  r.str(4);  // magic
  std::uint32_t version = r.u32();
  if (version != kVersion) throw FormatError("binary polynomial: unsupported version");
  std::uint64_t stored_hash = r.u64();
  std::uint64_t actual = fnv1a64(bytes.data() + r.pos(), bytes.size() - r.pos());
  if (stored_hash != actual)
    throw FormatError("binary polynomial: payload hash mismatch");

  std::uint32_t nvars = r.u32();
  if (nvars > 4096) throw FormatError("binary polynomial: variable count");
  std::vector<std::string> names;
  std::vector<long> weights;
  for (std::uint32_t i = 0; i < nvars; ++i) {
    std::uint32_t len = r.u32();
    if (len > 4096) throw FormatError("binary polynomial: name length");
    names.push_back(r.str(len));
    weights.push_back(long(r.i64()));
  }
  SpacePtr embedded = VariableSpace::create(std::move(names), std::move(weights));
  if (space && !compatible(space, embedded))
    throw FormatError("binary polynomial: space mismatch");
  SpacePtr use = space ? space : embedded;

  std::uint64_t nterms = r.u64();
  std::vector<Polynomial::Term> terms;
  terms.reserve(nterms);
  for (std::uint64_t t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) {
      std::uint32_t e = r.u32();
      if (e > 65535) throw FormatError("binary polynomial: exponent range");
      m.set_exp(i, e);
    }
    Int num = r.magnitude();
    Int den = r.magnitude();
    if (den <= 0) throw FormatError("binary polynomial: nonpositive denominator");
    terms.push_back({std::move(m), rat(num, den)});
  }
  if (!r.at_end()) throw FormatError("binary polynomial: trailing bytes");
  return Polynomial::from_terms(std::move(use), std::move(terms));
}

}  // namespace orthoforms
