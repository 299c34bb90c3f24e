// Copyright 2026 The sparsecce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparsecce/rational.hpp"

#include <cctype>
#include <cmath>

#include "sparsecce/errors.hpp"

namespace sparsecce {
namespace {

bool IsInteger(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (const size_t slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!IsInteger(num) || !IsInteger(den) || den[0] == '-') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = ParseInteger(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(ParseInteger(num), d);
    q.canonicalize();
    return q;
  }
  if (IsInteger(s)) return Rational(ParseInteger(s));
  if (const size_t dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string_view whole_digits =
        (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) ? whole.substr(1)
                                                                 : whole;
    if ((whole_digits.empty() && frac.empty()) ||
        (!whole_digits.empty() && !IsInteger(whole_digits)) ||
        (!frac.empty() && !IsInteger(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num = whole_digits.empty() ? mpz_class(0) : ParseInteger(whole_digits);
    num = num * scale + (frac.empty() ? mpz_class(0) : ParseInteger(frac));
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  throw ParseError("malformed rational '" + std::string(text) + "'");
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational FromDouble(double value) {
  if (!std::isfinite(value)) throw InputError("non-finite floating point value");
  Rational q(value);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

std::optional<Rational> ExactSqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace sparsecce
