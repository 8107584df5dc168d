#include "delone/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

namespace {
using i128 = __int128;

int sign_sqrt5(long long A, long long B) {
    // sign of A + B*sqrt5
    if (A == 0 && B == 0) return 0;
    if (A >= 0 && B >= 0) return +1;
    if (A <= 0 && B <= 0) return -1;
    i128 lhs = (i128)A * A;
    i128 rhs = (i128)5 * (i128)B * B;
    if (A > 0) return lhs > rhs ? +1 : (lhs < rhs ? -1 : 0); // B < 0
    return rhs > lhs ? +1 : (rhs < lhs ? -1 : 0);            // A < 0, B > 0
}

constexpr double kPhi = 1.6180339887498948482;
} // namespace

int sign(Golden x) { return sign_sqrt5(2 * x.a + x.b, x.b); }

int sign(GoldenFrac x) {
    int s = sign(x.num);
    return x.den > 0 ? s : -s;
}

double Golden::value() const { return (double)a + (double)b * kPhi; }

double GoldenFrac::value() const { return num.value() / (double)den; }

std::string Golden::str() const {
    if (b == 0) return std::to_string(a);
    std::string s;
    if (a != 0) s += std::to_string(a);
    if (b == 1) s += (a != 0 ? "+phi" : "phi");
    else if (b == -1) s += "-phi";
    else s += (a != 0 && b > 0 ? "+" : "") + std::to_string(b) + "phi";
    return s;
}

long long floor_int(Golden x) {
    long long n = (long long)std::floor(x.value());
    // correct the float guess exactly
    while (Golden::integer(n + 1) <= x) ++n;
    while (Golden::integer(n) > x) --n;
    return n;
}

long long floor_int(GoldenFrac x) {
    long long n = (long long)std::floor(x.value());
    while (GoldenFrac::integer(n + 1) <= x) ++n;
    while (sign(x - GoldenFrac::integer(n)) < 0) --n;
    return n;
}

GoldenFrac frac_of_double(double x) {
    const long long q = 1ll << 20;
    double scaled = x * (double)q;
    if (!(std::fabs(scaled) < 9.0e18)) throw std::invalid_argument("golden: threshold out of range");
    return {Golden::integer((long long)std::llround(scaled)), q};
}

namespace {

// number := term (('+'|'-') term)*, term := int | int 'phi' | 'phi'
Golden parse_golden_body(const std::string& s, size_t lo, size_t hi) {
    Golden acc{0, 0};
    size_t i = lo;
    int pending = +1;
    while (i < hi) {
        if (s[i] == '+') { pending = +1; ++i; continue; }
        if (s[i] == '-') { pending = -1; ++i; continue; }
        size_t j = i;
        long long mag = 0;
        bool have_digits = false;
        while (j < hi && s[j] >= '0' && s[j] <= '9') {
            mag = mag * 10 + (s[j] - '0');
            have_digits = true;
            ++j;
        }
        bool is_phi = (j + 3 <= hi && s.compare(j, 3, "phi") == 0);
        if (is_phi) j += 3;
        if (!have_digits && !is_phi) throw std::invalid_argument("golden: cannot parse '" + s + "'");
        long long coeff = pending * (have_digits ? mag : 1);
        if (is_phi) acc.b += coeff; else acc.a += coeff;
        pending = +1;
        i = j;
    }
    return acc;
}

std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s) if (c != ' ' && c != '\t') t += c;
    return t;
}

} // namespace

Golden parse_golden(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty()) throw std::invalid_argument("golden: empty literal");
    return parse_golden_body(s, 0, s.size());
}

GoldenFrac parse_golden_frac(const std::string& raw) {
    std::string s = strip_spaces(raw);
    size_t slash = s.rfind('/');
    if (slash == std::string::npos) return GoldenFrac::of(parse_golden(s));
    long long den = std::stoll(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("golden: denominator must be positive");
    std::string numpart = s.substr(0, slash);
    if (numpart.size() >= 2 && numpart.front() == '(' && numpart.back() == ')')
        numpart = numpart.substr(1, numpart.size() - 2);
    return {parse_golden(numpart), den};
}

} // namespace delone
