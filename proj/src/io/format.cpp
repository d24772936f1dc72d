#include "relthue/io/format.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "relthue/errors.hpp"

namespace relthue::io {

namespace {

constexpr int kSignificant = 5;
const char* const kDot = "·";

std::string scientific(std::string digits, long exp10, bool negative, bool trim) {
  if (trim) {
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  }
  std::string out = negative ? "-" : "";
  if (digits == "1") return out + "10^" + std::to_string(exp10);
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  return out + kDot + "10^" + std::to_string(exp10);
}

// Display width of UTF-8 text (continuation bytes do not count).
size_t width(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, size_t w) {
  size_t have = width(s);
  return have >= w ? s : std::string(w - have, ' ') + s;
}

mpq_class parse_plain(const std::string& text) {
  std::string s = text;
  bool neg = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  std::string int_part, frac_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  if (int_part.empty() && frac_part.empty()) throw InvalidInput("not a number: '" + text + "'");
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::string e = s.substr(pos);
    if (e.empty() || e.find_first_not_of("+-0123456789") != std::string::npos) {
      throw InvalidInput("bad exponent in '" + text + "'");
    }
    exp10 = std::stol(e);
    pos = s.size();
  }
  if (pos != s.size()) throw InvalidInput("not a number: '" + text + "'");
  mpz_class mant(int_part + frac_part == "" ? "0" : int_part + frac_part);
  exp10 -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(mant * scale) : mpq_class(mant, scale);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace

std::string format_integer(const mpz_class& z, bool trim) {
  mpz_class a = abs(z);
  std::string s = a.get_str();
  if (s.size() <= kSignificant) return z.get_str();
  const long exp10 = static_cast<long>(s.size()) - 1;
  mpz_class scale, q, r;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - kSignificant);
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), scale.get_mpz_t());
  if (2 * r >= scale) ++q;
  std::string digits = q.get_str();
  long e = exp10;
  if (digits.size() > kSignificant) {
    digits.pop_back();
    ++e;
  }
  return scientific(digits, e, z < 0, trim);
}

std::string format_real(const Real& x) {
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  if (mpfr_cmpabs_ui(x.raw(), 100000) < 0) {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.4Rf", x.raw());
    return buf;
  }
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, kSignificant, x.raw(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  return scientific(digits, static_cast<long>(e) - 1, neg, false);
}

mpq_class parse_exact(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw InvalidInput("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    mpq_class den = parse_exact(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + raw + "'");
    return parse_exact(text.substr(0, slash)) / den;
  }
  if (auto caret = text.find('^'); caret != std::string::npos) {
    std::string base = text.substr(0, caret), expo = text.substr(caret + 1);
    mpq_class factor = 1;
    if (auto star = base.find('*'); star != std::string::npos) {
      factor = parse_plain(base.substr(0, star));
      base = base.substr(star + 1);
    }
    mpq_class b = parse_plain(base), e = parse_plain(expo);
    if (e.get_den() != 1 || e < 0 || e > 100000) throw InvalidInput("bad power in '" + raw + "'");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e.get_num().get_ui());
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e.get_num().get_ui());
    mpq_class p(num, den);
    p.canonicalize();
    return factor * p;
  }
  return parse_plain(text);
}

std::string render_table(const lattice::ReductionTrace& trace) {
  const std::vector<std::string> head = {"step", "A0", "||b1||>=", "H", "Digits", "new A0"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : trace.steps) {
    rows.push_back({std::to_string(s.step_no) + ".", format_integer(s.A0_in), format_real(s.b1_required),
                    format_integer(s.H, true), std::to_string(s.digits), format_integer(s.A_new)});
  }
  std::vector<size_t> w(head.size());
  for (size_t c = 0; c < head.size(); ++c) {
    w[c] = width(head[c]);
    for (const auto& r : rows) w[c] = std::max(w[c], width(r[c]));
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) os << (c ? " | " : "") << pad(cells[c], w[c]);
    os << '\n';
  };
  line(head);
  size_t total = 0;
  for (size_t c = 0; c < w.size(); ++c) total += w[c] + (c ? 3 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace relthue::io
