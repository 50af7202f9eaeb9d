#include "quadlie/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace quadlie {

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0)
    throw std::domain_error("Scalar: zero denominator");
  v_.canonicalize();
}

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

static bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");

  auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
  mpz_class n(std::string(strip_plus(num)), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(mpq_class(n, d));
}

bool Scalar::is_integer() const { return v_.get_den() == 1; }

std::string Scalar::str() const {
  if (is_integer())
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw std::domain_error("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace quadlie
