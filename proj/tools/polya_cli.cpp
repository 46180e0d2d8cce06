// Survey driver: per-field reports, class-group sweeps, unit-family tables,
// cyclotomic minus-part tables, and squarefree sieves, emitted as CSV or
// JSON. Exit codes: 0 success, 2 bad input, 3 violated internal invariant.

#include <CLI11.hpp>

#include <polya/survey.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

namespace {

using polya::Int;

void cmd_quad(std::ostream& os, const Int& d, int digits)
{
    auto F = polya::make_field(d);
    os << "d: " << F.d << '\n';
    if (F.d < 0) {
        std::int64_t h = polya::class_number_definite(F.d);
        std::int64_t ha = polya::class_number_analytic(F);
        if (h != ha) throw std::logic_error("quad: class number routes disagree");
        auto cl = polya::class_group_definite(F);
        auto po = polya::polya_group(F);
        auto rel = polya::relative_class_group(F);
        os << "h: " << h << '\n'
           << "cl: " << polya::structure_string(cl) << '\n'
           << "s: " << F.s() << '\n'
           << "po_order: " << po.order << '\n'
           << "po: " << polya::structure_string(po.group) << '\n'
           << "rel_order: " << rel.order << '\n'
           << "rel: " << polya::structure_string(rel) << '\n'
           << "po_ratio: " << polya::detail::fmt12(polya::polya_ratio(F)) << '\n';
        return;
    }
    auto groups = polya::class_group_real(F);
    auto po_wide = polya::polya_group(F, polya::RealClassKind::wide);
    auto po_narrow = polya::polya_group(F, polya::RealClassKind::narrow);
    auto rel_wide = polya::relative_class_group(F, polya::RealClassKind::wide);
    auto rel_narrow = polya::relative_class_group(F, polya::RealClassKind::narrow);
    auto unit = polya::fundamental_unit(F);
    os << "h_wide: " << groups.wide.order << '\n'
       << "cl_wide: " << polya::structure_string(groups.wide) << '\n'
       << "h_narrow: " << groups.narrow.order << '\n'
       << "cl_narrow: " << polya::structure_string(groups.narrow) << '\n'
       << "s: " << F.s() << '\n'
       << "po_wide_order: " << po_wide.order << '\n'
       << "po_wide: " << polya::structure_string(po_wide.group) << '\n'
       << "po_narrow_order: " << po_narrow.order << '\n'
       << "po_narrow: " << polya::structure_string(po_narrow.group) << '\n'
       << "rel_wide_order: " << rel_wide.order << '\n'
       << "rel_narrow_order: " << rel_narrow.order << '\n'
       << "unit_x: " << unit.x << '\n'
       << "unit_y: " << unit.y << '\n'
       << "unit_sigma: " << unit.sigma << '\n'
       << "unit_norm: " << unit.norm << '\n'
       << "regulator: " << std::setprecision(digits) << unit.regulator << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "polya: exact surveys of quadratic and abelian class-group structure.\n"
        "Subcommand output is CSV by default ('#'-prefixed summary lines) or a\n"
        "JSON mirror with --format json."};
    app.require_subcommand(1);

    std::string disc_str;
    std::int64_t bound = 1000, N = 100, pmax = 100;
    std::string family = "n2p1", format = "csv", out_path;
    int workers = 1, digits = 12;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    };

    auto* quad = app.add_subcommand(
        "quad",
        "Single-field report for a fundamental discriminant d.\n"
        "Prints d, class number h (both computation routes must agree), class\n"
        "group structure, ramified-prime count s, Polya group order and\n"
        "structure, relative (class/Polya) group order, and for d > 0 the\n"
        "narrow/wide variants plus fundamental unit x, y, sigma, norm and the\n"
        "regulator.");
    quad->add_option("-d,--disc", disc_str, "fundamental discriminant, e.g. -84 or 40")
        ->required();
    quad->add_option("--precision", digits, "significant digits for the regulator")
        ->check(CLI::Range(1, 45));

    auto* survey = app.add_subcommand(
        "survey",
        "Imaginary sweep over all fundamental d with |d| <= bound.\n"
        "CSV columns: d (discriminant), h (class number, dual-checked),\n"
        "s (ramified primes), po (Polya group order), h_ratio (h/sqrt|d|),\n"
        "po_ratio (po/sqrt|d|), trivial_relative (1 when Cl = Po).\n"
        "Summary line '# cl_eq_po:' lists every d with Cl = Po.");
    survey->add_option("-B,--bound", bound, "sweep |d| up to this bound (3..10^6)");
    survey->add_option("--workers", workers, "worker threads; output is identical for any count")
        ->check(CLI::Range(1, 64));
    add_io(survey);

    auto* growth = app.add_subcommand(
        "growth",
        "Decade-bucket growth table from the imaginary sweep.\n"
        "CSV columns: bucket_lo, bucket_hi (|d| range, top bucket absorbs the\n"
        "endpoint), fields (count), median_growth and max_growth (log h /\n"
        "log|d|), max_po_ratio (max po/sqrt|d|).");
    growth->add_option("-B,--bound", bound, "sweep |d| up to this bound (>= 10^3)");
    growth->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 64));
    add_io(growth);

    auto* families = app.add_subcommand(
        "families",
        "Unit families n^2+1 and 4n^2-1 for n = 1..N.\n"
        "CSV columns: family, n, value (the radicand), squarefree (0/1),\n"
        "check (holds/fails/skipped: does the closed-form unit stay\n"
        "fundamental), regulator (empty when skipped), reg_ratio\n"
        "(log R / log sqrt(d), empty when skipped).\n"
        "Summary lines: failure lists per family, sieve density with the 1/6\n"
        "floor flag and the truncated local-density estimate.");
    families->add_option("-N", N, "largest n (>= 10)");
    add_io(families);

    auto* cyclo = app.add_subcommand(
        "cyclotomic",
        "Prime cyclotomic minus-part table for odd primes p <= pmax.\n"
        "CSV columns: p, degree (p-1), disc_abs (p^(p-2), checked against the\n"
        "character-conductor oracle), hminus (relative class number), ratio\n"
        "(log h^- / log sqrt|d|), lambda (exact rational discriminant\n"
        "exponent correction), lambda_ok (1 when lambda <= 2), reg_ratio\n"
        "(2^((p-1)/2 - 1), the quoted regulator-ratio constant).");
    cyclo->add_option("--pmax", pmax, "largest prime (3..100)");
    add_io(cyclo);

    auto* sieve = app.add_subcommand(
        "sieve",
        "Squarefree sieve report for one family over n = 1..N.\n"
        "CSV columns: n, p (excluded n with its least witness prime, p^2\n"
        "divides the family value). Summary line: family, N, count of\n"
        "squarefree values, density, floor_ok (density >= 1/6), estimate\n"
        "(truncated product of local densities).");
    sieve->add_option("--family", family, "n2p1 or 4n2m1")
        ->check(CLI::IsMember({"n2p1", "4n2m1"}));
    sieve->add_option("-N", N, "largest n (>= 1)");
    add_io(sieve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    bool json = format == "json";

    try {
        if (*quad) {
            cmd_quad(os, Int(disc_str), digits);
        } else if (*survey) {
            auto rows = polya::survey_imaginary(bound, workers);
            json ? polya::write_survey_json(os, rows) : polya::write_survey_csv(os, rows);
        } else if (*growth) {
            if (bound < 1000) throw std::invalid_argument("growth: bound must be >= 10^3");
            auto rows = polya::growth_buckets(polya::survey_imaginary(bound, workers), bound);
            json ? polya::write_growth_json(os, rows) : polya::write_growth_csv(os, rows);
        } else if (*families) {
            auto fs = polya::families_survey(N);
            json ? polya::write_families_json(os, fs) : polya::write_families_csv(os, fs);
        } else if (*cyclo) {
            auto rows = polya::cyclotomic_table(pmax);
            json ? polya::write_cyclotomic_json(os, rows) : polya::write_cyclotomic_csv(os, rows);
        } else if (*sieve) {
            auto fam = family == "n2p1" ? polya::Family::n2p1 : polya::Family::f4n2m1;
            auto rep = polya::sieve_family(fam, N);
            double est = polya::density_limit_estimate(fam, N);
            json ? polya::write_sieve_json(os, rep, est) : polya::write_sieve_csv(os, rep, est);
        }
    } catch (const polya::PrecisionLoss& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
