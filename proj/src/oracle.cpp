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

#include "spt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

namespace spt::oracle {

namespace {

// Minimal RAII handle over mpfr_t at the oracle precision.
class Mp {
public:
    Mp() { mpfr_init2(v_, precision_bits()); mpfr_set_zero(v_, 1); }
    Mp(double d) : Mp() { mpfr_set_d(v_, d, MPFR_RNDN); }  // NOLINT(google-explicit-constructor)
    Mp(const Mp& o) : Mp() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mp(Mp&& o) noexcept : Mp() { mpfr_swap(v_, o.v_); }
    Mp& operator=(Mp o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Mp() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend Mp operator+(const Mp& a, const Mp& b) { Mp r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator-(const Mp& a, const Mp& b) { Mp r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator*(const Mp& a, const Mp& b) { Mp r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator/(const Mp& a, const Mp& b) { Mp r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator-(const Mp& a) { Mp r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

private:
    mpfr_t v_;
};

Mp mp_abs(const Mp& a) { Mp r; mpfr_abs(r.get(), a.get(), MPFR_RNDN); return r; }
Mp mp_log(const Mp& a) { Mp r; mpfr_log(r.get(), a.get(), MPFR_RNDN); return r; }
Mp mp_sqrt(const Mp& a) { Mp r; mpfr_sqrt(r.get(), a.get(), MPFR_RNDN); return r; }
Mp mp_gamma(const Mp& a) { Mp r; mpfr_gamma(r.get(), a.get(), MPFR_RNDN); return r; }
Mp mp_pow(const Mp& a, const Mp& b) { Mp r; mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
Mp mp_euler() { Mp r; mpfr_const_euler(r.get(), MPFR_RNDN); return r; }
Mp mp_atan2(const Mp& y, const Mp& x) { Mp r; mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN); return r; }
Mp mp_cos(const Mp& a) { Mp r; mpfr_cos(r.get(), a.get(), MPFR_RNDN); return r; }
Mp mp_sin(const Mp& a) { Mp r; mpfr_sin(r.get(), a.get(), MPFR_RNDN); return r; }
bool below(const Mp& a, const Mp& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

Mp tolerance() {
    Mp r(1.0);
    mpfr_div_2si(r.get(), r.get(), precision_bits() - 8, MPFR_RNDN);
    return r;
}

struct Cx {
    Mp re, im;
    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        const Mp d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    [[nodiscard]] Mp abs2() const { return re * re + im * im; }
    [[nodiscard]] std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

Cx cx(std::complex<double> z) { return {Mp(z.real()), Mp(z.imag())}; }

}  // namespace

long precision_bits() {
    static const long bits = [] {
        const char* env = std::getenv("SPT_NLCS_PRECISION");
        if (env == nullptr) return 256L;
        try {
            return std::clamp(std::stol(env), 64L, 4096L);
        } catch (...) {
            return 256L;
        }
    }();
    return bits;
}

double bessel_i(double nu, double x) {
    const Mp q = Mp(0.25) * Mp(x) * Mp(x);
    Mp term = mp_pow(Mp(0.5 * x), Mp(nu)) / mp_gamma(Mp(nu + 1.0));
    Mp sum = term;
    const Mp tol = tolerance();
    for (int k = 1; k < 100000; ++k) {
        term = term * q / (Mp(k) * (Mp(k) + Mp(nu)));
        sum = sum + term;
        if (below(term, sum * tol) && k > x) break;
    }
    return sum.to_double();
}

double bessel_k0(double x) {
    // K0(x) = -(ln(x/2) + gamma_E) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
    const Mp q = Mp(0.25) * Mp(x) * Mp(x);
    Mp term(1.0), i0(1.0), tail(0.0), harmonic(0.0);
    const Mp tol = tolerance();
    for (int k = 1; k < 100000; ++k) {
        term = term * q / (Mp(k) * Mp(k));
        harmonic = harmonic + Mp(1.0) / Mp(k);
        i0 = i0 + term;
        tail = tail + term * harmonic;
        if (below(term * harmonic, tail * tol) && k > x) break;
    }
    const Mp lead = mp_log(Mp(0.5) * Mp(x)) + mp_euler();
    return (tail - lead * i0).to_double();
}

std::complex<double> bessel_j(double nu, std::complex<double> z) {
    // (z/2)^nu by principal log
    const Cx half = cx(0.5 * z);
    const Mp r = mp_sqrt(half.abs2());
    const Mp arg = mp_atan2(half.im, half.re);
    const Mp mag = mp_pow(r, Mp(nu));
    const Mp ang = arg * Mp(nu);
    const Cx lead{mag * mp_cos(ang), mag * mp_sin(ang)};

    const Cx zz = cx(z);
    const Cx q = Cx{Mp(-0.25), Mp(0.0)} * zz * zz;
    Cx term{Mp(1.0) / mp_gamma(Mp(nu + 1.0)), Mp(0.0)};
    Cx sum = term;
    const Mp tol = tolerance();
    for (int k = 1; k < 100000; ++k) {
        const Mp d = Mp(k) * (Mp(k) + Mp(nu));
        term = term * q;
        term = Cx{term.re / d, term.im / d};
        sum = sum + term;
        if (below(term.abs2(), sum.abs2() * tol * tol) && k > std::abs(z)) break;
    }
    return (lead * sum).to_complex();
}

double hyp1f2(double a, double b1, double b2, double x) {
    Mp term(1.0), sum(1.0);
    const Mp tol = tolerance();
    for (int n = 0; n < 1000000; ++n) {
        term = term * (Mp(a) + Mp(n)) * Mp(x) / ((Mp(b1) + Mp(n)) * (Mp(b2) + Mp(n)) * Mp(n + 1));
        sum = sum + term;
        if (below(mp_abs(term), mp_abs(sum) * tol) && n > std::abs(x)) break;
    }
    return sum.to_double();
}

std::complex<double> hyp2f1_at_minus_one(std::complex<double> a, std::complex<double> b,
                                         std::complex<double> c) {
    const Cx A = cx(a), B = cx(b), C = cx(c);
    constexpr int kTerms = 400;
    std::vector<Cx> partial;
    partial.reserve(kTerms);
    Cx term{Mp(1.0), Mp(0.0)}, sum = term;
    partial.push_back(sum);
    for (int n = 0; n + 1 < kTerms; ++n) {
        const Cx nn{Mp(n), Mp(0.0)};
        term = term * (A + nn) * (B + nn) / ((C + nn) * Cx{Mp(n + 1), Mp(0.0)});
        term = Cx{-term.re, -term.im};
        sum = sum + term;
        partial.push_back(sum);
    }
    // repeated averaging of neighbouring partial sums (Euler transformation)
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
            partial[i] = Cx{Mp(0.5) * (partial[i].re + partial[i + 1].re),
                            Mp(0.5) * (partial[i].im + partial[i + 1].im)};
        }
        partial.pop_back();
    }
    return partial.front().to_complex();
}

double gamma(double x) { return mp_gamma(Mp(x)).to_double(); }

}  // namespace spt::oracle
