#include "orthoforms/rational.hpp"

#include <stdexcept>

namespace orthoforms {

Rat rat_from_string(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  };
  if (text.empty()) bad();
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rat();  // unreachable
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;  // base canonical => powers canonical
}

int rat_sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

std::string hash_to_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[std::size_t(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace orthoforms
