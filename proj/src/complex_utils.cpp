#include "fht/complex_utils.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace fht {

namespace {

double parse_double(std::string_view tok, const std::string& full) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);  // from_chars rejects '+'
  if (tok.empty()) throw DomainError("parse_complex: bad literal '" + full + "'");
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw DomainError("parse_complex: bad literal '" + full + "'");
  return value;
}

// Coefficient in front of a trailing 'i': "", "+", "-" mean 1, 1, -1.
double parse_imag_coeff(std::string_view tok, const std::string& full) {
  if (tok.empty() || tok == "+") return 1.0;
  if (tok == "-") return -1.0;
  return parse_double(tok, full);
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  std::string s = os.str();
  // Trim to the shortest representation that round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream trial;
    trial.precision(prec);
    trial << x;
    double back = 0.0;
    const std::string t = trial.str();
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), back);
    (void)ptr;
    if (ec == std::errc() && back == x) return t;
  }
  return s;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("parse_complex: empty literal");

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) return Complex(parse_double(s, text), 0.0);

  s.pop_back();  // drop the trailing i
  // Split at the last sign that is not part of an exponent and not leading.
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Complex(0.0, parse_imag_coeff(s, text));
  const std::string re_tok = s.substr(0, split);
  const std::string im_tok = s.substr(split);
  return Complex(parse_double(re_tok, text), parse_imag_coeff(im_tok, text));
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(std::abs(z.imag())) + "i";
  const std::string sign = z.imag() < 0.0 ? "-" : "+";
  if (z.real() == 0.0) return (z.imag() < 0.0 ? "-" : "") + im;
  return format_double(z.real()) + sign + im;
}

}  // namespace fht
