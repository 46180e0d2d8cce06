#ifndef POLYA_SURVEY_HPP
#define POLYA_SURVEY_HPP

// Survey sweeps and their table emitters. All sweeps are deterministic: work
// is split into fixed-size chunks whose boundaries do not depend on the
// worker count, each chunk buffers its own rows, and buffers are concatenated
// in chunk order, so a given configuration always yields byte-identical
// output.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <polya/abelian.hpp>
#include <polya/forms.hpp>
#include <polya/polya.hpp>
#include <polya/quadfield.hpp>
#include <polya/sieve.hpp>
#include <polya/units.hpp>

namespace polya {

// fn(a, b, out) handles the inclusive sub-range [a, b]
template <class Row, class Fn>
std::vector<Row> chunked_map(std::int64_t lo, std::int64_t hi, std::int64_t chunk, int workers,
                             Fn&& fn)
{
    if (chunk < 1 || lo > hi) throw std::invalid_argument("chunked_map: bad range");
    if (workers < 1) workers = 1;
    std::size_t nchunks = static_cast<std::size_t>((hi - lo) / chunk + 1);
    std::vector<std::vector<Row>> parts(nchunks);
    std::atomic<std::size_t> cursor{0};
    std::mutex err_mtx;
    std::exception_ptr err;

    auto work = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= nchunks) return;
            std::int64_t a = lo + static_cast<std::int64_t>(i) * chunk;
            std::int64_t b = std::min(hi, a + chunk - 1);
            try {
                fn(a, b, parts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    std::vector<Row> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct ImagRow {
    std::int64_t d = -3;      // fundamental, negative
    std::int64_t h = 1;       // class number, verified against both routes
    int s = 1;                // ramified prime count
    std::int64_t po = 1;      // Polya group order
    bool trivial_rel = true;  // class group equals Polya group
};

namespace detail {

inline ImagRow imaginary_row(std::int64_t t)
{
    Int d(-t);
    auto F = make_field(d);
    ImagRow row;
    row.d = -t;
    row.s = F.s();

    long long dl = static_cast<long long>(-t);
    row.h = count_reduced_definite<long long>(dl);
    std::int64_t ha = class_number_analytic(F);
    if (row.h != ha)
        throw std::logic_error("survey: form count and analytic class number disagree at d = " +
                               std::to_string(-t));

    using LForm = basic_quad_form<long long>;
    std::vector<LForm> gens;
    for (const auto& amb : ambiguous_forms(F))
        gens.push_back({amb.form.a.convert_to<long long>(), amb.form.b.convert_to<long long>(),
                        amb.form.c.convert_to<long long>()});
    LForm id = principal_form_t<long long>(dl);
    auto mul = [dl](const LForm& f, const LForm& g) {
        return compose_reduced<long long>(f, g, dl, 0);
    };
    row.po = static_cast<std::int64_t>(subgroup_closure(id, gens, mul).size());
    row.trivial_rel = row.po == row.h;
    return row;
}

} // namespace detail

// all imaginary fundamental discriminants with |d| <= B, ascending |d|
inline std::vector<ImagRow> survey_imaginary(std::int64_t B, int workers = 1)
{
    if (B < 3 || B > 1000000)
        throw std::invalid_argument("survey_imaginary: bound must lie in [3, 10^6]");
    return chunked_map<ImagRow>(3, B, 512, workers,
                                [](std::int64_t a, std::int64_t b, std::vector<ImagRow>& out) {
                                    for (std::int64_t t = a; t <= b; ++t)
                                        if (is_fundamental_discriminant(Int(-t)))
                                            out.push_back(detail::imaginary_row(t));
                                });
}

struct BucketRow {
    std::int64_t lo = 10;       // bucket covers lo <= |d| <= hi
    std::int64_t hi = 99;
    std::int64_t fields = 0;
    double median_growth = 0;   // log h / log |d|
    double max_growth = 0;
    double max_po_ratio = 0;    // po / sqrt(|d|)
};

inline std::vector<BucketRow> growth_buckets(const std::vector<ImagRow>& rows, std::int64_t B)
{
    std::vector<BucketRow> out;
    for (std::int64_t lo = 10; lo <= B; lo *= 10) {
        BucketRow bucket;
        bucket.lo = lo;
        // plain decades, except the top one absorbs the sweep endpoint
        bucket.hi = 10 * lo >= B ? B : 10 * lo - 1;
        std::vector<double> growth;
        for (const auto& r : rows) {
            std::int64_t t = -r.d;
            if (t < bucket.lo || t > bucket.hi) continue;
            double g = std::log(static_cast<double>(r.h)) / std::log(static_cast<double>(t));
            double pr = static_cast<double>(r.po) / std::sqrt(static_cast<double>(t));
            growth.push_back(g);
            bucket.max_growth = std::max(bucket.max_growth, g);
            bucket.max_po_ratio = std::max(bucket.max_po_ratio, pr);
        }
        bucket.fields = static_cast<std::int64_t>(growth.size());
        if (!growth.empty()) {
            std::sort(growth.begin(), growth.end());
            std::size_t n = growth.size();
            bucket.median_growth =
                n % 2 ? growth[n / 2] : (growth[n / 2 - 1] + growth[n / 2]) / 2;
        }
        out.push_back(bucket);
        if (bucket.hi >= B) break;
    }
    return out;
}

struct FamilyRow {
    Family family = Family::n2p1;
    std::int64_t n = 1;
    Int value = 2;
    bool squarefree = true;
    FamilyCheck check = FamilyCheck::holds;
    double regulator = 0;       // NaN when skipped
    double reg_ratio = 0;       // log R / log sqrt(d), NaN when skipped
};

struct FamiliesSurvey {
    std::int64_t N = 10;
    std::vector<FamilyRow> rows;                       // n2p1 block then 4n2m1 block
    std::vector<std::int64_t> n2p1_failures, f4n2m1_failures;
    SieveReport sieve_n2p1, sieve_4n2m1;
    double estimate_n2p1 = 1, estimate_4n2m1 = 1;
};

inline FamiliesSurvey families_survey(std::int64_t N)
{
    if (N < 10) throw std::invalid_argument("families_survey: need N >= 10");
    FamiliesSurvey out;
    out.N = N;
    const double nan = std::nan("");
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        SieveReport rep = sieve_family(fam, N);
        std::set<std::int64_t> excluded;
        for (const auto& e : rep.excluded) excluded.insert(e.n);
        for (std::int64_t n = 1; n <= N; ++n) {
            FamilyRow row;
            row.family = fam;
            row.n = n;
            row.value = family_value(fam, n);
            row.squarefree = !excluded.count(n);
            row.check = check_family(fam, n);
            if ((row.check == FamilyCheck::skipped) != !row.squarefree)
                throw std::logic_error("families_survey: sieve and unit check disagree");
            if (row.squarefree) {
                UnitData u = fundamental_unit(discriminant_of_radicand(row.value));
                row.regulator = u.regulator.convert_to<double>();
                row.reg_ratio = regulator_ratio(n, fam);
                if (row.check == FamilyCheck::fails)
                    (fam == Family::n2p1 ? out.n2p1_failures : out.f4n2m1_failures).push_back(n);
            } else {
                row.regulator = nan;
                row.reg_ratio = nan;
            }
            out.rows.push_back(std::move(row));
        }
        (fam == Family::n2p1 ? out.sieve_n2p1 : out.sieve_4n2m1) = std::move(rep);
        (fam == Family::n2p1 ? out.estimate_n2p1 : out.estimate_4n2m1) =
            density_limit_estimate(fam, N);
    }
    return out;
}

struct CycRow {
    std::int64_t p = 3;
    std::int64_t degree = 2;
    Int disc_abs = 3;      // p^(p-2), checked against the character oracle
    Int hminus = 1;
    double ratio = 0;      // log h^- / log sqrt(|d|)
    Rat lambda;
    bool lambda_ok = true;
    Int reg_ratio = 1;     // 2^((p-1)/2 - 1), quoted constant
};

inline std::vector<CycRow> cyclotomic_table(std::int64_t pmax)
{
    if (pmax < 3 || pmax > 100)
        throw std::invalid_argument("cyclotomic_table: pmax must lie in [3, 100]");
    std::vector<CycRow> out;
    for (std::int64_t p = 3; p <= pmax; ++p) {
        if (!is_prime(Int(p))) continue;
        auto K = make_abelian(p, {});
        auto bd = discriminant_breakdown(K);
        if (bd.disc_abs != discriminant_oracle(K))
            throw std::logic_error("cyclotomic_table: discriminant oracle mismatch at p = " +
                                   std::to_string(p));
        CycRow row;
        row.p = p;
        row.degree = p - 1;
        row.disc_abs = bd.disc_abs;
        row.lambda = bd.entries[0].lambda;
        row.lambda_ok = row.lambda <= 2;
        row.hminus = hminus_cyclotomic(p);
        row.ratio = (log(Float50(row.hminus)) / (log(Float50(row.disc_abs)) / 2))
                        .convert_to<double>();
        row.reg_ratio = Int(1) << static_cast<unsigned>((p - 1) / 2 - 1);
        out.push_back(std::move(row));
    }
    return out;
}

// ---- emission ----------------------------------------------------------

namespace detail {

inline std::string fmt12(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string fmt12_or_empty(double x)
{
    return std::isnan(x) ? std::string() : fmt12(x);
}

inline const char* check_name(FamilyCheck c)
{
    switch (c) {
        case FamilyCheck::holds: return "holds";
        case FamilyCheck::fails: return "fails";
        default: return "skipped";
    }
}

} // namespace detail

inline void write_survey_csv(std::ostream& os, const std::vector<ImagRow>& rows)
{
    os << "d,h,s,po,h_ratio,po_ratio,trivial_relative\n";
    for (const auto& r : rows) {
        double sq = std::sqrt(static_cast<double>(-r.d));
        os << r.d << ',' << r.h << ',' << r.s << ',' << r.po << ','
           << detail::fmt12(r.h / sq) << ',' << detail::fmt12(r.po / sq) << ','
           << (r.trivial_rel ? 1 : 0) << '\n';
    }
    os << "# cl_eq_po:";
    for (const auto& r : rows)
        if (r.trivial_rel) os << ' ' << r.d;
    os << '\n';
}

inline void write_growth_csv(std::ostream& os, const std::vector<BucketRow>& rows)
{
    os << "bucket_lo,bucket_hi,fields,median_growth,max_growth,max_po_ratio\n";
    for (const auto& r : rows)
        os << r.lo << ',' << r.hi << ',' << r.fields << ','
           << detail::fmt12(r.median_growth) << ',' << detail::fmt12(r.max_growth) << ','
           << detail::fmt12(r.max_po_ratio) << '\n';
}

inline void write_families_csv(std::ostream& os, const FamiliesSurvey& fs)
{
    os << "family,n,value,squarefree,check,regulator,reg_ratio\n";
    for (const auto& r : fs.rows)
        os << family_name(r.family) << ',' << r.n << ',' << r.value << ','
           << (r.squarefree ? 1 : 0) << ',' << detail::check_name(r.check) << ','
           << detail::fmt12_or_empty(r.regulator) << ','
           << detail::fmt12_or_empty(r.reg_ratio) << '\n';
    os << "# n2p1_failures:";
    for (auto n : fs.n2p1_failures) os << ' ' << n;
    os << "\n# 4n2m1_failures:";
    for (auto n : fs.f4n2m1_failures) os << ' ' << n;
    os << "\n# n2p1_density: " << detail::fmt12(fs.sieve_n2p1.density)
       << " floor_ok: " << (fs.sieve_n2p1.floor_ok ? 1 : 0)
       << " estimate: " << detail::fmt12(fs.estimate_n2p1);
    os << "\n# 4n2m1_density: " << detail::fmt12(fs.sieve_4n2m1.density)
       << " floor_ok: " << (fs.sieve_4n2m1.floor_ok ? 1 : 0)
       << " estimate: " << detail::fmt12(fs.estimate_4n2m1) << '\n';
}

inline void write_cyclotomic_csv(std::ostream& os, const std::vector<CycRow>& rows)
{
    os << "p,degree,disc_abs,hminus,ratio,lambda,lambda_ok,reg_ratio\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.degree << ',' << r.disc_abs << ',' << r.hminus << ','
           << detail::fmt12(r.ratio) << ',' << numerator(r.lambda) << '/'
           << denominator(r.lambda) << ',' << (r.lambda_ok ? 1 : 0) << ',' << r.reg_ratio
           << '\n';
}

inline void write_sieve_csv(std::ostream& os, const SieveReport& rep, double estimate)
{
    os << "n,p\n";
    for (const auto& e : rep.excluded) os << e.n << ',' << e.p << '\n';
    os << "# family: " << family_name(rep.family) << " N: " << rep.N
       << " count: " << rep.count << " density: " << detail::fmt12(rep.density)
       << " floor_ok: " << (rep.floor_ok ? 1 : 0)
       << " estimate: " << detail::fmt12(estimate) << '\n';
}

namespace detail {

inline nlohmann::ordered_json json_or_null(double x)
{
    if (std::isnan(x)) return nullptr;
    return x;
}

} // namespace detail

inline void write_survey_json(std::ostream& os, const std::vector<ImagRow>& rows)
{
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    auto& cl_eq_po = doc["cl_eq_po"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        double sq = std::sqrt(static_cast<double>(-r.d));
        doc["rows"].push_back({{"d", r.d},
                               {"h", r.h},
                               {"s", r.s},
                               {"po", r.po},
                               {"h_ratio", r.h / sq},
                               {"po_ratio", r.po / sq},
                               {"trivial_relative", r.trivial_rel}});
        if (r.trivial_rel) cl_eq_po.push_back(r.d);
    }
    os << doc.dump(1) << '\n';
}

inline void write_growth_json(std::ostream& os, const std::vector<BucketRow>& rows)
{
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        doc.push_back({{"bucket_lo", r.lo},
                       {"bucket_hi", r.hi},
                       {"fields", r.fields},
                       {"median_growth", r.median_growth},
                       {"max_growth", r.max_growth},
                       {"max_po_ratio", r.max_po_ratio}});
    os << doc.dump(1) << '\n';
}

inline void write_families_json(std::ostream& os, const FamiliesSurvey& fs)
{
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : fs.rows)
        doc["rows"].push_back({{"family", family_name(r.family)},
                               {"n", r.n},
                               {"value", r.value.convert_to<std::int64_t>()},
                               {"squarefree", r.squarefree},
                               {"check", detail::check_name(r.check)},
                               {"regulator", detail::json_or_null(r.regulator)},
                               {"reg_ratio", detail::json_or_null(r.reg_ratio)}});
    doc["n2p1_failures"] = fs.n2p1_failures;
    doc["4n2m1_failures"] = fs.f4n2m1_failures;
    doc["n2p1_density"] = fs.sieve_n2p1.density;
    doc["n2p1_floor_ok"] = fs.sieve_n2p1.floor_ok;
    doc["n2p1_estimate"] = fs.estimate_n2p1;
    doc["4n2m1_density"] = fs.sieve_4n2m1.density;
    doc["4n2m1_floor_ok"] = fs.sieve_4n2m1.floor_ok;
    doc["4n2m1_estimate"] = fs.estimate_4n2m1;
    os << doc.dump(1) << '\n';
}

inline void write_cyclotomic_json(std::ostream& os, const std::vector<CycRow>& rows)
{
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        doc.push_back({{"p", r.p},
                       {"degree", r.degree},
                       {"disc_abs", r.disc_abs.str()},
                       {"hminus", r.hminus.str()},
                       {"ratio", r.ratio},
                       {"lambda", numerator(r.lambda).str() + "/" + denominator(r.lambda).str()},
                       {"lambda_ok", r.lambda_ok},
                       {"reg_ratio", r.reg_ratio.str()}});
    os << doc.dump(1) << '\n';
}

inline void write_sieve_json(std::ostream& os, const SieveReport& rep, double estimate)
{
    nlohmann::ordered_json doc;
    doc["family"] = family_name(rep.family);
    doc["N"] = rep.N;
    doc["count"] = rep.count;
    doc["density"] = rep.density;
    doc["floor_ok"] = rep.floor_ok;
    doc["estimate"] = estimate;
    doc["excluded"] = nlohmann::ordered_json::array();
    for (const auto& e : rep.excluded) doc["excluded"].push_back({{"n", e.n}, {"p", e.p}});
    os << doc.dump(1) << '\n';
}

} // namespace polya

#endif
