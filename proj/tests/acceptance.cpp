// Acceptance gate: twelve structural checks covering the whole toolkit, one
// pass/fail line each. Tolerances and ranges are pinned here on purpose;
// loosening them is not an option.

#include <polya/survey.hpp>

#include "subgroups.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

using namespace polya;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& detail)
{
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << detail
              << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

void criterion_1()
{
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t checked = 0, mismatches = 0;
    for (std::int64_t t = 3; t <= 10000; ++t) {
        if (!is_fundamental_discriminant(Int(-t))) continue;
        ++checked;
        std::int64_t h_forms = detail::count_reduced_definite<long long>(-t);
        std::int64_t h_analytic = class_number_analytic(make_field(Int(-t)));
        if (h_forms != h_analytic) ++mismatches;
    }
    double secs = seconds_since(t0);
    report(1, mismatches == 0 && secs < 60.0 && checked > 3000,
           "form-count h == analytic h on " + std::to_string(checked) + " fields in " +
               fmt(secs) + " s (" + std::to_string(mismatches) + " mismatches)");
}

void criterion_2()
{
    std::int64_t checked = 0, bad = 0;
    for (std::int64_t t = 3; t <= 10000; ++t) {
        if (!is_fundamental_discriminant(Int(-t))) continue;
        auto F = make_field(Int(-t));
        ++checked;
        if (Int(polya_group(F).order) != hilbert_order(F)) ++bad;
    }
    report(2, bad == 0 && checked > 3000,
           "|Po| == 2^(s-1) on " + std::to_string(checked) + " imaginary fields (" +
               std::to_string(bad) + " violations)");
}

void criterion_3()
{
    std::int64_t squares = 0, bad = 0;
    for (std::int64_t t = 3; t <= 10000; ++t) {
        if (!is_fundamental_discriminant(Int(-t))) continue;
        for (const auto& amb : ambiguous_forms(make_field(Int(-t)))) {
            QuadForm f = reduce(amb.form);
            ++squares;
            if (!is_principal(compose(f, f))) ++bad;
        }
    }
    report(3, bad == 0 && squares > 4000,
           "all " + std::to_string(squares) + " ambiguous generators square to principal (" +
               std::to_string(bad) + " violations)");
}

std::vector<ImagRow> big_rows;

void criterion_4()
{
    auto t0 = std::chrono::steady_clock::now();
    big_rows = survey_imaginary(100000, 4);
    double secs = seconds_since(t0);
    std::vector<std::int64_t> late;
    for (const auto& r : big_rows)
        if (r.trivial_rel && -r.d > 10000) late.push_back(r.d);
    std::string tail;
    for (auto d : late) tail += " " + std::to_string(d);
    report(4, late.empty() && secs < 1800.0,
           "Cl == Po list over |d| <= 10^5 gains no member past 10^4 in " + fmt(secs) +
               " s with 4 workers" + (late.empty() ? "" : "; late members:" + tail));
}

void criterion_5()
{
    auto buckets = growth_buckets(big_rows, 100000);
    // decades starting at 10^2, 10^3, 10^4
    std::vector<double> maxima;
    for (const auto& b : buckets)
        if (b.lo >= 100) maxima.push_back(b.max_po_ratio);
    bool ok = maxima.size() == 3;
    std::string vals;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        if (i && maxima[i] >= maxima[i - 1]) ok = false;
        vals += (i ? " > " : "") + fmt(maxima[i]);
    }
    report(5, ok, "max |Po|/sqrt|d| per decade strictly falls: " + vals);
}

void criterion_6()
{
    auto buckets = growth_buckets(big_rows, 100000);
    double med = buckets.empty() ? 0 : buckets.back().median_growth;
    bool ok = !buckets.empty() && buckets.back().lo == 10000 && med >= 0.40 && med <= 0.55;
    report(6, ok, "median log h/log|d| over [10^4,10^5] is " + fmt(med) + ", inside [0.40,0.55]");
}

void criterion_7()
{
    auto t0 = std::chrono::steady_clock::now();
    // the same field recurs under many m; verify each distinct field once and
    // let the cache answer for its other appearances
    struct FieldVerdict {
        bool equal;
        bool lambda_ok;
    };
    std::int64_t instances = 0, mismatches = 0, lambda_bad = 0;
    std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, FieldVerdict> seen;
    for (std::int64_t m = 1; m <= 200; ++m) {
        for (const auto& H : all_subgroups_mod(m)) {
            auto K = make_abelian(m, H);
            ++instances;
            auto it = seen.find({K.conductor, K.H});
            if (it == seen.end()) {
                auto bd = discriminant_breakdown(K);
                FieldVerdict v{bd.disc_abs == discriminant_oracle(K), true};
                for (const auto& ent : bd.entries)
                    if (ent.lambda > 2) v.lambda_ok = false;
                it = seen.emplace(std::make_pair(K.conductor, K.H), v).first;
            }
            if (!it->second.equal) ++mismatches;
            if (!it->second.lambda_ok) ++lambda_bad;
        }
    }
    double secs = seconds_since(t0);
    report(7,
           mismatches == 0 && lambda_bad == 0 && instances > 2000 && secs < 300.0,
           "discriminant breakdown == character oracle on " + std::to_string(instances) +
               " cyclotomic subfields, m <= 200 (" + std::to_string((std::int64_t)seen.size()) +
               " distinct), all lambda <= 2, in " + fmt(secs) + " s");
}

FamiliesSurvey fam_survey;

void criterion_8()
{
    fam_survey = families_survey(1000);
    bool n2p1_ok = fam_survey.n2p1_failures == std::vector<std::int64_t>{2};
    bool f4_ok = fam_survey.f4n2m1_failures.empty();
    std::string fails;
    for (auto n : fam_survey.n2p1_failures) fails += " " + std::to_string(n);
    report(8, n2p1_ok && f4_ok,
           "4n2m1 unit holds for every squarefree n <= 10^3; n2p1 exception set is {" +
               (fails.empty() ? "" : fails.substr(1)) + "}");
}

void criterion_9()
{
    bool floors = true;
    std::string densities;
    for (std::int64_t N : {1000, 10000, 100000}) {
        auto rep = sieve_family(Family::f4n2m1, N);
        floors = floors && rep.floor_ok;
        densities += " " + fmt(rep.density);
    }
    std::int64_t brute_bad = 0;
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        auto rep = sieve_family(fam, 10000);
        std::set<std::int64_t> excluded;
        for (const auto& e : rep.excluded) excluded.insert(e.n);
        for (std::int64_t n = 1; n <= 10000; ++n)
            if (is_squarefree(family_value(fam, n)) != !excluded.count(n)) ++brute_bad;
    }
    report(9, floors && brute_bad == 0,
           "4n2m1 density >= 1/6 at N in {10^3,10^4,10^5} (densities" + densities +
               "); sieve == factorization for N <= 10^4 (" + std::to_string(brute_bad) +
               " disagreements)");
}

void criterion_10()
{
    bool ok = true;
    std::string vals;
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        double at10 = regulator_ratio(10, fam);
        double at1000 = regulator_ratio(1000, fam);
        ok = ok && at1000 < at10;
        vals += std::string(" ") + family_name(fam) + ": " + fmt(at1000) + " < " + fmt(at10);
    }
    report(10, ok, "log R / log sqrt(d) falls from n=10 to n=10^3:" + vals);
}

void criterion_11()
{
    bool small_ok = true;
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19})
        small_ok = small_ok && hminus_cyclotomic(p) == 1;
    bool h23_ok = hminus_cyclotomic(23) == 3 && class_number_definite(Int(-23)) == 3;
    std::int64_t unstable = 0, imprecise = 0;
    for (std::int64_t p = 3; p <= 100; ++p) {
        if (!is_prime(Int(p))) continue;
        Int a, b;
        if (!detail::hminus_round<50>(p, a)) ++imprecise;
        if (!detail::hminus_round<100>(p, b) || a != b) ++unstable;
    }
    report(11, small_ok && h23_ok && unstable == 0 && imprecise == 0,
           "h^- = 1 up to p=19, h^-(23) = 3 matching h(-23); residues < 1e-6 and "
           "precision-doubling stable for all p <= 100");
}

void criterion_12()
{
    auto rows1 = survey_imaginary(1000, 1);
    auto rows8 = survey_imaginary(1000, 8);
    std::ostringstream a, b;
    write_survey_csv(a, rows1);
    write_survey_csv(b, rows8);
    std::ostringstream ja, jb;
    write_survey_json(ja, rows1);
    write_survey_json(jb, rows8);
    bool ok = a.str() == b.str() && ja.str() == jb.str() && !a.str().empty();
    report(12, ok, "survey B=10^3 output byte-identical for 1 vs 8 workers (" +
                       std::to_string(a.str().size()) + " bytes)");
}

} // namespace

int main()
{
    struct Step {
        int idx;
        void (*run)();
    };
    const Step steps[] = {{1, criterion_1},  {2, criterion_2},  {3, criterion_3},
                          {4, criterion_4},  {5, criterion_5},  {6, criterion_6},
                          {7, criterion_7},  {8, criterion_8},  {9, criterion_9},
                          {10, criterion_10}, {11, criterion_11}, {12, criterion_12}};
    for (const auto& step : steps) {
        try {
            step.run();
        } catch (const std::exception& e) {
            report(step.idx, false, std::string("threw: ") + e.what());
        }
    }
    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all 12 criteria passed" << std::endl;
    return 0;
}
