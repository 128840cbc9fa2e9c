#include "lieco/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace lieco {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// mpz_set_str rejects an explicit plus sign
mpz_class mpz_of(std::string token) {
  if (!token.empty() && token[0] == '+') token.erase(token.begin());
  return mpz_class(token);
}

} // namespace

Rat rat_parse(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw std::invalid_argument("bad rational: " + text);
    mpz_class num_z = mpz_of(num), den_z = mpz_of(den);
    if (den_z == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat r(num_z, den_z);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() || whole == "+" || whole == "-") whole += "0";
    if (!is_integer_token(whole)) throw std::invalid_argument("bad decimal: " + text);
    for (char ch : frac)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad decimal: " + text);
    if (frac.size() > 9) throw std::invalid_argument("more than 9 fraction digits: " + text);
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class w = mpz_of(whole);
    bool neg = w < 0 || whole[0] == '-';
    mpz_class abs_w = abs(w);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(frac);
    mpz_class num = abs_w * scale + f;
    if (neg) num = -num;
    Rat r(num, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_token(s)) throw std::invalid_argument("bad rational: " + text);
  return Rat(mpz_of(s));
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_d(const Rat& r) { return r.get_d(); }

std::string ratvec_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

RatVec ratvec_parse_csv(const std::string& text) {
  RatVec out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

} // namespace lieco
