#include "torcc/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "torcc/errors.hpp"

namespace torcc {

namespace {

mpz_class euler_phi(std::int64_t n) {
    mpz_class result(static_cast<long>(n));
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

mpz_class pow_mpz(std::int64_t base, std::int64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

bool is_minimal_rotation(const std::vector<std::int64_t>& t) {
    const std::size_t n = t.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t a = t[(i + r) % n];
            if (a < t[i]) return false;
            if (a > t[i]) break;
        }
    }
    return true;
}

std::int64_t rotation_period(const std::vector<std::int64_t>& t) {
    const std::size_t n = t.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = t[i] == t[i - p];
        if (periodic) return static_cast<std::int64_t>(p);
    }
    return static_cast<std::int64_t>(n);
}

template <typename Fn>
void for_each_tuple(std::int64_t n, std::int64_t B, Fn&& fn) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(t);
        std::int64_t i = n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == B) {
            t[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return;
        ++t[static_cast<std::size_t>(i)];
    }
}

}  // namespace

mpz_class necklace_count(std::int64_t n, std::int64_t B) {
    if (n < 1 || B < 1) throw DomainError("necklace_count requires n, B >= 1");
    mpz_class sum = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        sum += euler_phi(d) * pow_mpz(B, n / d);
    }
    return sum / n;
}

std::vector<NecklaceClass> enumerate_classes(std::int64_t n, std::int64_t B,
                                             std::uint64_t max_tuples) {
    if (n < 1 || B < 1) throw DomainError("enumerate_classes requires n, B >= 1");
    mpz_class total = pow_mpz(B, n);
    if (total > max_tuples)
        throw BudgetError("tuple budget exceeded: B^n = " + total.get_str());
    std::vector<NecklaceClass> out;
    for_each_tuple(n, B, [&](const std::vector<std::int64_t>& t) {
        if (!is_minimal_rotation(t)) return;
        NecklaceClass c;
        c.representative = t;
        c.multiplicity = rotation_period(t);
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<SpectrumEntry> length_spectrum(std::int64_t n, std::int64_t B,
                                           std::int64_t k,
                                           std::uint64_t max_tuples) {
    std::vector<SpectrumEntry> out;
    for (std::int64_t size = 1; size <= n; ++size) {
        for (auto& cls : enumerate_classes(size, B, max_tuples)) {
            SpectrumEntry e;
            e.length = translation_length(psi(TwistTuple(cls.representative, B), k));
            e.cls = std::move(cls);
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return a.length < b.length;
              });
    return out;
}

GrowthEstimate growth_rate(std::int64_t B, std::int64_t n_max, double C) {
    if (B < 2 || n_max < 1 || C <= 0)
        throw DomainError("growth_rate requires B >= 2, n_max >= 1, C > 0");
    GrowthEstimate g;
    g.B = B;
    g.n_max = n_max;
    g.C = C;
    mpz_class cumulative = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        cumulative += necklace_count(n, B);
        g.counts.push_back(cumulative);
    }
    mpf_class total(g.counts.back(), 256);
    double log_total = std::log(total.get_d());
    g.p_hat = log_total / (static_cast<double>(n_max) * C);
    double n = static_cast<double>(n_max);
    g.closed_form_bound = (n * std::log(static_cast<double>(B)) - std::log(n)) / (n * C);
    return g;
}

AxisSweepReport axis_boundedness_sweep(std::int64_t n, std::int64_t B,
                                       std::int64_t k, bool parallel,
                                       std::uint64_t max_tuples) {
    AxisSweepReport rep;
    rep.bound = mpz_class(static_cast<long>(k)) * static_cast<long>(B);
    rep.ok = true;
    std::vector<NecklaceClass> classes;
    for (std::int64_t size = 1; size <= n; ++size) {
        auto cs = enumerate_classes(size, B, max_tuples);
        classes.insert(classes.end(), std::make_move_iterator(cs.begin()),
                       std::make_move_iterator(cs.end()));
    }
    rep.classes = static_cast<std::int64_t>(classes.size());
    if (parallel) {
        mpz_class global_max = 0;
        bool all_ok = true;
#pragma omp parallel
        {
            mpz_class local_max = 0;
            bool local_ok = true;
#pragma omp for schedule(dynamic, 16) nowait
            for (std::size_t i = 0; i < classes.size(); ++i) {
                auto cert = cf_bound_certificate(
                    TwistTuple(classes[i].representative, B), k);
                if (cert.max_entry > local_max) local_max = cert.max_entry;
                local_ok = local_ok && cert.ok;
            }
#pragma omp critical
            {
                if (local_max > global_max) global_max = local_max;
                all_ok = all_ok && local_ok;
            }
        }
        rep.empirical_K = global_max;
        rep.ok = all_ok;
    } else {
        rep.empirical_K = 0;
        for (const auto& c : classes) {
            auto cert = cf_bound_certificate(TwistTuple(c.representative, B), k);
            if (cert.max_entry > rep.empirical_K) rep.empirical_K = cert.max_entry;
            rep.ok = rep.ok && cert.ok;
        }
    }
    return rep;
}

}  // namespace torcc
