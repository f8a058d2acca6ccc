/*
   Copyright 2026 The spt-nlcs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "spt/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "spt/errors.hpp"

namespace spt {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

long double Rational::to_long_double() const {
    const std::string n = q_.get_num().get_str(), d = q_.get_den().get_str();
    return std::strtold(n.c_str(), nullptr) / std::strtold(d.c_str(), nullptr);
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    const auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto to_mpz = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return mpz_class(t, 10);
    };

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d)) throw std::invalid_argument("bad rational literal: " + s);
        return Rational(to_mpz(n), to_mpz(d));
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!valid_int(ip) || !valid_int(fp) || fp[0] == '-' || fp[0] == '+')
            throw std::invalid_argument("bad decimal literal: " + s);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class n = mpz_class(ip, 10) * scale + mpz_class(fp, 10);
        if (neg) n = -n;
        return Rational(n, scale);
    }
    if (!valid_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(to_mpz(s));
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace spt
