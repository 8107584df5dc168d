#include "delone/delone_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace delone {

double Pt::norm() const {
    double vx = x.value(), vy = y.value();
    return dim == 1 ? std::fabs(vx) : std::sqrt(vx * vx + vy * vy);
}

bool Pt::lex_less(const Pt& o) const {
    int s = sign(x - o.x);
    if (s != 0) return s < 0;
    return sign(y - o.y) < 0;
}

Cluster Cluster::anchored(std::vector<Pt> pts) {
    Cluster c;
    c.dim = pts.empty() ? 1 : pts.front().dim;
    std::sort(pts.begin(), pts.end(), [](const Pt& p, const Pt& q) { return p.lex_less(q); });
    if (!pts.empty()) {
        Pt a = pts.front();
        for (auto& p : pts) p = p - a;
    }
    c.points = std::move(pts);
    return c;
}

std::string Cluster::key() const {
    std::string s;
    for (auto& p : points) {
        s += std::to_string(p.x.a) + "," + std::to_string(p.x.b);
        if (dim == 2) s += "," + std::to_string(p.y.a) + "," + std::to_string(p.y.b);
        s += ";";
    }
    return s;
}

std::string Cluster::csv() const {
    std::string s;
    char buf[64];
    for (auto& p : points) {
        s += std::to_string(p.x.a) + "," + std::to_string(p.x.b);
        if (dim == 2) s += "," + std::to_string(p.y.a) + "," + std::to_string(p.y.b);
        snprintf(buf, sizeof buf, ",%.17g", p.x.value());
        s += buf;
        if (dim == 2) {
            snprintf(buf, sizeof buf, ",%.17g", p.y.value());
            s += buf;
        }
        s += "\n";
    }
    return s;
}

DeloneSpec DeloneSpec::substitution(SubstRule rule, std::string seed) {
    DeloneSpec s;
    s.kind_ = SpecKind::Substitution;
    s.word_ = std::make_shared<TwoSidedWord>(std::move(rule), std::move(seed));
    return s;
}

DeloneSpec DeloneSpec::fibonacci(std::string seed) {
    return substitution(SubstRule::fibonacci(), std::move(seed));
}

DeloneSpec DeloneSpec::cut_project(GoldenFrac lo, GoldenFrac hi) {
    if (!(sign(hi - lo) > 0)) throw std::invalid_argument("cut_project: empty window");
    DeloneSpec s;
    s.kind_ = SpecKind::CutProject;
    s.cp_lo_ = lo;
    s.cp_hi_ = hi;
    return s;
}

DeloneSpec DeloneSpec::periodic(Golden basis) {
    if (sign(basis) <= 0) throw std::invalid_argument("periodic: basis must be positive");
    DeloneSpec s;
    s.kind_ = SpecKind::Periodic;
    s.period_ = basis;
    return s;
}

DeloneSpec DeloneSpec::product(DeloneSpec a, DeloneSpec b) {
    if (a.dimension() != 1 || b.dimension() != 1)
        throw std::invalid_argument("product: factors must be one-dimensional");
    DeloneSpec s;
    s.kind_ = SpecKind::Product;
    s.fx_ = std::make_shared<DeloneSpec>(std::move(a));
    s.fy_ = std::make_shared<DeloneSpec>(std::move(b));
    return s;
}

const TwoSidedWord& DeloneSpec::word() const {
    if (kind_ != SpecKind::Substitution) throw std::logic_error("not a substitution spec");
    return *word_;
}

const DeloneSpec& DeloneSpec::factor(int i) const {
    if (kind_ != SpecKind::Product) throw std::logic_error("not a product spec");
    return i == 0 ? *fx_ : *fy_;
}

std::string DeloneSpec::base_id() const {
    switch (kind_) {
        case SpecKind::Substitution: {
            std::string id = "subst:";
            for (auto& [c, img] : word_->rule().images) id += std::string(1, c) + ">" + img + ";";
            for (auto& [c, len] : word_->rule().lengths) id += std::string(1, c) + "=" + len.str() + ";";
            return id + "seed=" + word_->seed();
        }
        case SpecKind::CutProject:
            return "cp:[" + cp_lo_.num.str() + "/" + std::to_string(cp_lo_.den) + "," +
                   cp_hi_.num.str() + "/" + std::to_string(cp_hi_.den) + ")";
        case SpecKind::Periodic:
            return "periodic:" + period_.str();
        case SpecKind::Product:
            return "product:(" + fx_->base_id() + ")x(" + fy_->base_id() + ")";
    }
    return "?";
}

double DeloneSpec::max_gap_hint() const {
    switch (kind_) {
        case SpecKind::Periodic: return period_.value();
        case SpecKind::Substitution: {
            double m = 0;
            for (auto& [c, len] : word_->rule().lengths) m = std::max(m, len.value());
            return m;
        }
        case SpecKind::CutProject: {
            // gaps of a golden model set are bounded by a few window spans
            return 4.0 / (cp_hi_ - cp_lo_).value() + 4.0;
        }
        case SpecKind::Product: return std::max(fx_->max_gap_hint(), fy_->max_gap_hint());
    }
    return 1.0;
}

std::vector<Golden> DeloneSpec::points_in(GoldenFrac lo, GoldenFrac hi) const {
    std::vector<Golden> pts;
    switch (kind_) {
        case SpecKind::Periodic: {
            // k*g in [lo, hi]
            double g = period_.value();
            long long k0 = (long long)std::floor(lo.value() / g) - 2;
            while (GoldenFrac::of(Golden::integer(k0) * period_) < lo) ++k0;   // k0*g >= lo
            while (!(GoldenFrac::of(Golden::integer(k0 - 1) * period_) < lo)) --k0;
            long long k1 = (long long)std::ceil(hi.value() / g) + 2;
            while (hi < GoldenFrac::of(Golden::integer(k1) * period_)) --k1;   // k1*g <= hi
            while (!(hi < GoldenFrac::of(Golden::integer(k1 + 1) * period_))) ++k1;
            for (long long k = k0; k <= k1; ++k) pts.push_back(Golden::integer(k) * period_);
            break;
        }
        case SpecKind::Substitution: {
            auto [k0, k1] = word_->starts_in(lo, hi);
            for (long long k = k0; k <= k1; ++k) pts.push_back(word_->start(k));
            break;
        }
        case SpecKind::CutProject: {
            // x = a + b*phi in [lo,hi], x* = (a+b) - b*phi in [wlo, whi)
            // b = (x - x*)/sqrt5 ranges over a finite integer interval.
            const double s5 = std::sqrt(5.0);
            double bmin = (lo.value() - cp_hi_.value()) / s5 - 2;
            double bmax = (hi.value() - cp_lo_.value()) / s5 + 2;
            for (long long b = (long long)std::floor(bmin); b <= (long long)std::ceil(bmax); ++b) {
                // window condition pins a to an interval of length |W|
                // x* = (a+b) - b*phi in [wlo, whi) <=> a in [wlo - b + b*phi, whi - b + b*phi)
                GoldenFrac alo = cp_lo_ - Golden{b, -b}; // wlo - (b - b*phi)
                GoldenFrac ahi = cp_hi_ - Golden{b, -b};
                long long a0 = floor_int(alo);
                if (GoldenFrac::of(Golden::integer(a0)) < alo) ++a0;
                long long a1 = floor_int(ahi);
                if (!(GoldenFrac::of(Golden::integer(a1)) < ahi)) --a1; // half-open at whi
                for (long long a = a0; a <= a1; ++a) {
                    Golden x{a, b};
                    if (!(GoldenFrac::of(x) < lo) && !(hi < GoldenFrac::of(x))) pts.push_back(x);
                }
            }
            std::sort(pts.begin(), pts.end(), [](Golden u, Golden v) { return u < v; });
            break;
        }
        case SpecKind::Product:
            throw std::logic_error("points_in: use window_points for products");
    }
    return pts;
}

std::vector<Pt> window_points(const DeloneSpec& spec, Pt shift, Pt center, GoldenFrac radius) {
    std::vector<Pt> out;
    if (sign(radius) <= 0) throw std::invalid_argument("window_points: radius must be positive");
    if (spec.dimension() == 1) {
        GoldenFrac c = GoldenFrac::of(center.x + shift.x);
        for (Golden p : spec.points_in(c - radius, c + radius)) out.push_back(Pt::d1(p - shift.x));
    } else {
        // cartesian candidates from the bounding square, then exact disc test
        const DeloneSpec& A = spec.factor(0);
        const DeloneSpec& B = spec.factor(1);
        GoldenFrac cx = GoldenFrac::of(center.x + shift.x), cy = GoldenFrac::of(center.y + shift.y);
        auto px = A.points_in(cx - radius, cx + radius);
        auto py = B.points_in(cy - radius, cy + radius);
        // |p - c|^2 <= r^2 with exact arithmetic: all terms in Z[phi]/den^2
        for (Golden x : px) {
            for (Golden y : py) {
                Golden dx = x - (center.x + shift.x);
                Golden dy = y - (center.y + shift.y);
                Golden d2 = dx * dx + dy * dy; // exact, coefficients stay modest at desk scales
                // d2 <= radius^2  <=>  den^2 * d2 - num^2 <= 0
                Golden num2 = radius.num * radius.num;
                long long den2 = radius.den * radius.den;
                if (sign(GoldenFrac{den2 * d2 - num2, den2}) <= 0)
                    out.push_back(Pt::d2(x - shift.x, y - shift.y));
            }
        }
    }
    return out;
}

Cluster patch_exact(const DeloneSpec& spec, Pt center, GoldenFrac radius) {
    return Cluster::anchored(window_points(spec, Pt::zero(spec.dimension()), center, radius));
}

Cluster patch(const DeloneSpec& spec, Pt center, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("patch: radius must be positive");
    return patch_exact(spec, center, frac_of_double(radius));
}

DeloneConstants delone_constants(const DeloneSpec& spec, double probe_radius) {
    auto pts = window_points(spec, Pt::zero(spec.dimension()), Pt::zero(spec.dimension()),
                             frac_of_double(probe_radius));
    if (pts.size() < 2) throw std::invalid_argument("delone_constants: fewer than 2 points in probe window");
    DeloneConstants dc{1e300, 0.0};
    if (spec.dimension() == 1) {
        std::sort(pts.begin(), pts.end(), [](const Pt& p, const Pt& q) { return p.lex_less(q); });
        double max_gap = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            double gap = (pts[i].x - pts[i - 1].x).value();
            dc.packing_r = std::min(dc.packing_r, gap);
            max_gap = std::max(max_gap, gap);
        }
        dc.covering_R = max_gap / 2;
    } else {
        // nearest-neighbour gap and covering radius on a sample grid
        for (size_t i = 0; i < pts.size(); ++i) {
            double best = 1e300;
            for (size_t j = 0; j < pts.size(); ++j)
                if (j != i) best = std::min(best, (pts[i] - pts[j]).norm());
            dc.packing_r = std::min(dc.packing_r, best);
        }
        double R = 0;
        int n = 64;
        double extent = probe_radius * 0.5;
        for (int gx = -n; gx <= n; ++gx)
            for (int gy = -n; gy <= n; ++gy) {
                double qx = extent * gx / n, qy = extent * gy / n;
                double best = 1e300;
                for (auto& p : pts) {
                    double dx = p.x.value() - qx, dy = p.y.value() - qy;
                    best = std::min(best, std::sqrt(dx * dx + dy * dy));
                }
                R = std::max(R, best);
            }
        dc.covering_R = R;
    }
    return dc;
}

std::vector<Cluster> enumerate_clusters(const DeloneSpec& spec, double R,
                                        double scan_start, double scan_cap) {
    if (!(R > 0)) throw std::invalid_argument("enumerate_clusters: R must be positive");
    GoldenFrac rad = frac_of_double(R);
    std::map<std::string, Cluster> classes;
    size_t prev = 0;
    int stable = 0;
    for (double L = scan_start; L <= scan_cap; L *= 2) {
        classes.clear();
        auto anchors = window_points(spec, Pt::zero(spec.dimension()), Pt::zero(spec.dimension()),
                                     frac_of_double(L));
        for (auto& x : anchors) {
            Cluster c = patch_exact(spec, x, rad);
            classes.emplace(c.key(), std::move(c));
        }
        if (classes.size() == prev) {
            if (++stable >= 2) break;
        } else {
            stable = 0;
        }
        prev = classes.size();
    }
    if (stable < 2)
        throw std::runtime_error("enumerate_clusters: class count did not stabilize (FLC not witnessed)");
    std::vector<Cluster> out;
    for (auto& [k, c] : classes) out.push_back(c);
    return out;
}

long long cluster_count(const DeloneSpec& spec, const Cluster& P, GoldenFrac lo, GoldenFrac hi) {
    if (P.points.empty()) return 0;
    if (!(sign(hi - lo) > 0)) return 0;
    if (spec.dimension() != 1) throw std::invalid_argument("cluster_count: 1D windows only");
    // anchor candidates: set points x with x + P inside window and x + P subset of the set
    auto pts = spec.points_in(lo, hi);
    std::vector<Golden> sorted = pts;
    auto contains = [&](Golden q) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), q,
                                   [](Golden u, Golden v) { return u < v; });
        return it != sorted.end() && *it == q;
    };
    long long count = 0;
    Golden span = P.points.back().x; // anchored: min 0, max = span
    for (Golden x : pts) {
        if (hi < GoldenFrac::of(x + span)) continue; // x + P must fit in the window
        bool ok = true;
        for (auto& p : P.points)
            if (!contains(x + p.x)) { ok = false; break; }
        count += ok ? 1 : 0;
    }
    return count;
}

double repetitivity_radius(const DeloneSpec& spec, const Cluster& P, double scan_bound) {
    if (spec.dimension() != 1) throw std::invalid_argument("repetitivity_radius: 1D only");
    GoldenFrac lo = frac_of_double(-scan_bound), hi = frac_of_double(scan_bound);
    auto pts = spec.points_in(lo, hi);
    std::vector<Golden> sorted = pts;
    auto contains = [&](Golden q) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), q,
                                   [](Golden u, Golden v) { return u < v; });
        return it != sorted.end() && *it == q;
    };
    // occurrence anchors of P
    std::vector<double> occ;
    for (Golden x : pts) {
        bool ok = true;
        for (auto& p : P.points)
            if (!contains(x + p.x)) { ok = false; break; }
        if (ok) occ.push_back(x.value());
    }
    if (occ.empty()) throw std::invalid_argument("repetitivity_radius: cluster never found in scan window");
    double span = P.points.back().x.value();
    // every ball B_R(c) with c in the interior must contain an occurrence interval [o, o+span]
    // worst case over c: largest half-distance between consecutive occurrences, plus span
    double worst = 0;
    for (size_t i = 1; i < occ.size(); ++i) worst = std::max(worst, (occ[i] - occ[i - 1]) / 2);
    return worst + span;
}

} // namespace delone
