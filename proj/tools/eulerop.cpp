// eulerop: command-line front end for the threshold, counting, Galois and
// asymptotic computations. Exit codes: 0 success, 2 usage error,
// 3 computation error.

#include <eulerop/eulerop.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using eulerop::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct Options {
    int n = 0;
    std::string c;
    int digits = 20;
    long precision = 256;
    std::string format;
    std::string grid;
    std::uint64_t pmax = eulerop::kDefaultPrimeLimit;
    int nmax = 0;
    std::string mu;
    int alpha_index = 1;
    int K = eulerop::kDefaultTruncation;
    std::string output;
};

// Output is either a JSON document or CSV rows; each command fills one.
struct Output {
    json doc;
    std::vector<std::vector<std::string>> rows;  // first row is the header
};

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out + '\n';
}

Rational parse_c(const std::string& text, const char* flag) {
    auto r = eulerop::try_parse_rational(text);
    if (!r) throw UsageError(std::string(flag) + ": not a rational or decimal literal: '" + text + "'");
    return *r;
}

void require_n(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be a positive integer");
}

std::string dec(const eulerop::BigFloat& v, int digits) { return eulerop::to_decimal(v.to_rational(), digits); }

struct Grid {
    Rational lo;
    Rational hi;
    int steps = 0;

    std::vector<Rational> points() const {
        std::vector<Rational> out;
        if (steps == 0) {
            out.push_back(lo);
            return out;
        }
        for (int i = 0; i <= steps; ++i) out.push_back(lo + (hi - lo) * eulerop::make_rational(i, steps));
        return out;
    }
};

// "lo:hi:steps", endpoints exact rationals; steps + 1 equally spaced points.
Grid parse_grid(const std::string& spec) {
    auto first = spec.find(':');
    auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (second == std::string::npos) throw UsageError("--grid must look like lo:hi:steps");
    Grid g;
    g.lo = parse_c(spec.substr(0, first), "--grid");
    g.hi = parse_c(spec.substr(first + 1, second - first - 1), "--grid");
    std::string steps = spec.substr(second + 1);
    if (steps.empty() || steps.find_first_not_of("0123456789") != std::string::npos || steps.size() > 6)
        throw UsageError("--grid steps must be a non-negative integer below 10^6");
    g.steps = std::stoi(steps);
    if (g.hi < g.lo) throw UsageError("--grid needs lo <= hi");
    return g;
}

json threshold_json(const eulerop::ThresholdValue& t, int digits) {
    return t.is_exact() ? json(eulerop::to_string(t.exact())) : json(t.decimal(digits));
}

// ---- commands ----

Output cmd_thresholds(const Options& o) {
    require_n(o);
    auto ts = eulerop::cached_threshold_set(o.n);
    Output out;
    out.doc = json::array();
    out.rows.push_back({"index", "value", "exact", "distinguished"});
    for (std::size_t k = 0; k < ts->entries.size(); ++k) {
        const auto& t = ts->entries[k];
        out.doc.push_back(threshold_json(t, o.digits));
        out.rows.push_back({std::to_string(k + 1), threshold_json(t, o.digits).get<std::string>(),
                            t.is_exact() ? "true" : "false", k == ts->distinguished ? "true" : "false"});
    }
    return out;
}

Output cmd_classify(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    int count = eulerop::classify(o.n, c);
    Output out;
    out.doc = {{"n", o.n}, {"c", eulerop::to_string(c)}, {"count", count}};
    out.rows = {{"n", "c", "count"}, {std::to_string(o.n), eulerop::to_string(c), std::to_string(count)}};
    return out;
}

Output cmd_deficiency(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    int d = eulerop::deficiency_indices(o.n, c);
    Output out;
    out.doc = {{"n", o.n}, {"c", eulerop::to_string(c)}, {"n_plus", d}, {"n_minus", d}};
    out.rows = {{"n", "c", "n_plus", "n_minus"},
                {std::to_string(o.n), eulerop::to_string(c), std::to_string(d), std::to_string(d)}};
    return out;
}

Output cmd_selfadjoint(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    bool esa = eulerop::is_essentially_selfadjoint(o.n, c);
    std::string threshold = threshold_json(eulerop::cached_threshold_set(o.n)->top(), o.digits).get<std::string>();
    Output out;
    out.doc = {{"n", o.n}, {"c", eulerop::to_string(c)}, {"essentially_selfadjoint", esa}, {"threshold", threshold}};
    out.rows = {{"n", "c", "essentially_selfadjoint", "threshold"},
                {std::to_string(o.n), eulerop::to_string(c), esa ? "true" : "false", threshold}};
    return out;
}

Output cmd_bands(const Options& o) {
    require_n(o);
    Output out;
    out.doc = json::array();
    out.rows.push_back({"low", "high", "low_closed", "high_closed", "count"});
    for (const auto& b : eulerop::band_table(o.n)) {
        json low = b.low ? threshold_json(*b.low, o.digits) : json(nullptr);
        json high = b.high ? threshold_json(*b.high, o.digits) : json(nullptr);
        out.doc.push_back({{"low", low},
                           {"high", high},
                           {"low_closed", b.lowClosed},
                           {"high_closed", b.highClosed},
                           {"count", b.count}});
        out.rows.push_back({b.low ? low.get<std::string>() : "-inf", b.high ? high.get<std::string>() : "inf",
                            b.lowClosed ? "true" : "false", b.highClosed ? "true" : "false",
                            std::to_string(b.count)});
    }
    return out;
}

Output cmd_roots(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    eulerop::NumericOptions opt;
    opt.precision = static_cast<eulerop::precision_t>(o.precision);
    auto inv = eulerop::numeric_roots(o.n, c, opt);
    Output out;
    json roots = json::array();
    out.rows.push_back({"re", "im", "multiplicity", "radius"});
    for (const auto& r : inv.roots) {
        std::string re = dec(r.value.re, o.digits), im = dec(r.value.im, o.digits);
        std::string rad = r.radius.is_zero() ? "0" : r.radius.to_string(3);
        roots.push_back({{"re", re}, {"im", im}, {"multiplicity", r.multiplicity}, {"radius", rad}});
        out.rows.push_back({re, im, std::to_string(r.multiplicity), rad});
    }
    out.doc = {{"n", o.n},
               {"c", eulerop::to_string(c)},
               {"precision", inv.precision},
               {"method", eulerop::to_string(inv.method)},
               {"counts", {{"gt", inv.counts.gt}, {"on", inv.counts.on}, {"lt", inv.counts.lt}}},
               {"roots", roots}};
    return out;
}

Output cmd_hpoly(const Options& o) {
    require_n(o);
    auto fam = eulerop::build_hurwitz(o.n);
    Output out;
    json coeffs = json::array();
    out.rows.push_back({"degree", "coefficient"});
    for (int j = 0; j <= fam.hPoly.degree(); ++j) {
        coeffs.push_back(eulerop::to_string(fam.hPoly.coeff(j)));
        out.rows.push_back({std::to_string(j), eulerop::to_string(fam.hPoly.coeff(j))});
    }
    out.doc = {{"n", o.n}, {"polynomial", eulerop::to_string(fam.hPoly, "c")}, {"coefficients", coeffs}};
    return out;
}

Output cmd_orlando(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    auto fam = eulerop::build_hurwitz(o.n);
    auto prec = static_cast<eulerop::precision_t>(o.precision);
    auto prod = eulerop::orlando_product(o.n, c, prec);
    auto err = eulerop::orlando_check(fam, c, prec);
    std::string h = eulerop::to_string(fam.hPoly(c));
    std::string re = dec(prod.re, o.digits), im = dec(prod.im, o.digits), e = err.to_string(3);
    Output out;
    out.doc = {{"n", o.n}, {"c", eulerop::to_string(c)}, {"h", h}, {"product_re", re}, {"product_im", im},
               {"relative_error", e}};
    out.rows = {{"n", "c", "h", "product_re", "product_im", "relative_error"},
                {std::to_string(o.n), eulerop::to_string(c), h, re, im, e}};
    return out;
}

std::string opt_prime(const std::optional<std::uint64_t>& p) { return p ? std::to_string(*p) : "none"; }

Output cmd_galois(const Options& o) {
    require_n(o);
    if (o.n < 2) throw UsageError("galois needs --n >= 2");
    auto f = eulerop::threshold_integer_poly(o.n);
    Output out;
    json witnesses = json::array();
    out.rows.push_back({"target", "prime", "degrees"});
    for (auto target : {eulerop::CycleTarget::full_cycle, eulerop::CycleTarget::n_minus_2_cycle,
                        eulerop::CycleTarget::transposition}) {
        auto ev = eulerop::find_cycle_type_prime(f, target, o.pmax);
        std::string degs;
        for (std::size_t i = 0; i < ev.degrees.size(); ++i) degs += (i ? " " : "") + std::to_string(ev.degrees[i]);
        witnesses.push_back({{"target", eulerop::to_string(target)},
                             {"prime", ev.prime ? json(*ev.prime) : json(nullptr)},
                             {"degrees", ev.degrees}});
        out.rows.push_back({eulerop::to_string(target), opt_prime(ev.prime), degs});
    }
    out.doc = {{"n", o.n}, {"scale", f.scale.get_str()}, {"pmax", o.pmax}, {"witnesses", witnesses}};
    return out;
}

Output cmd_table_a1(const Options& o) {
    if (o.nmax < 4) throw UsageError("table-a1 needs --nmax >= 4");
    Output out;
    out.doc = json::array();
    out.rows.push_back({"n", "full_cycle", "n_minus_2_cycle", "transposition"});
    for (int n = 4; n <= o.nmax; ++n) {
        auto row = eulerop::cycle_prime_row(n, o.pmax);
        auto j = [](const std::optional<std::uint64_t>& p) { return p ? json(*p) : json(nullptr); };
        out.doc.push_back({{"n", n},
                           {"full_cycle", j(row.full_cycle)},
                           {"n_minus_2_cycle", j(row.n_minus_2_cycle)},
                           {"transposition", j(row.transposition)}});
        out.rows.push_back({std::to_string(n), opt_prime(row.full_cycle), opt_prime(row.n_minus_2_cycle),
                            opt_prime(row.transposition)});
    }
    return out;
}

Output cmd_table_a2(const Options& o) {
    if (o.nmax < 1) throw UsageError("table-a2 needs --nmax >= 1");
    if (o.digits < 1 || o.digits > 50) throw UsageError("--digits must lie in 1..50");
    Output out;
    out.doc = json::array();
    out.rows.push_back({"n", "c_n", "conjecture"});
    for (const auto& r : eulerop::table_a2(o.nmax, o.digits)) {
        out.doc.push_back({{"n", r.n}, {"c_n", r.cn}, {"conjecture", r.conjectureValue}});
        out.rows.push_back({std::to_string(r.n), r.cn, r.conjectureValue});
    }
    return out;
}

Output cmd_table_a3(const Options& o) {
    if (o.nmax < 1) throw UsageError("table-a3 needs --nmax >= 1");
    if (o.digits < 1 || o.digits > 50) throw UsageError("--digits must lie in 1..50");
    Output out;
    out.doc = json::array();
    out.rows.push_back({"n", "lower", "c_n_root", "upper", "sandwich"});
    for (const auto& r : eulerop::table_a3(o.nmax, o.digits)) {
        out.doc.push_back({{"n", r.n},
                           {"lower", r.lowerBound},
                           {"c_n_root", r.midValue},
                           {"upper", r.upperBound},
                           {"sandwich", r.sandwich}});
        out.rows.push_back({std::to_string(r.n), r.lowerBound, r.midValue, r.upperBound, r.sandwich ? "true" : "false"});
    }
    return out;
}

Output cmd_figure1(const Options& o) {
    require_n(o);
    Grid g = parse_grid(o.grid.empty() ? "-3:3:60" : o.grid);
    auto prec = static_cast<eulerop::precision_t>(o.precision);
    Output out;
    std::vector<std::string> header{"x", "c"};
    for (int j = 1; j <= 2 * o.n; ++j) header.push_back("re_alpha" + std::to_string(j));
    for (int j = 1; j <= 2 * o.n; ++j) header.push_back("re_beta" + std::to_string(j));
    out.rows.push_back(header);
    out.doc = json::array();
    for (const auto& p : eulerop::figure1_data(o.n, g.points(), prec)) {
        std::vector<std::string> row{eulerop::to_string(p.x), eulerop::to_string(p.c)};
        json alpha = json::array(), beta = json::array();
        for (const auto& a : p.reAlpha) {
            row.push_back(dec(a, o.digits));
            alpha.push_back(row.back());
        }
        for (const auto& b : p.reBeta) {
            row.push_back(dec(b, o.digits));
            beta.push_back(row.back());
        }
        out.doc.push_back({{"x", row[0]}, {"c", row[1]}, {"re_alpha", alpha}, {"re_beta", beta}});
        out.rows.push_back(std::move(row));
    }
    return out;
}

Output cmd_frobenius(const Options& o) {
    require_n(o);
    Rational c = parse_c(o.c, "--c");
    Rational mu = parse_c(o.mu.empty() ? "1" : o.mu, "--mu");
    if (o.K < 0) throw UsageError("--K must be non-negative");
    if (o.alpha_index < 1 || o.alpha_index > 2 * o.n) throw UsageError("--alpha-index must lie in 1..2n");
    Grid g = parse_grid(o.grid.empty() ? "1/10:1:9" : o.grid);
    if (g.lo <= 0) throw UsageError("frobenius grid must stay in x > 0");
    auto prec = static_cast<eulerop::precision_t>(o.precision);
    auto s = eulerop::series_solution(o.n, c, mu, o.alpha_index, o.K, prec);
    Output out;
    out.rows.push_back({"x", "re_y", "im_y"});
    json pts = json::array();
    for (const auto& x : g.points()) {
        auto y = eulerop::eval_solution(s, x);
        std::string re = dec(y.re, o.digits), im = dec(y.im, o.digits);
        out.rows.push_back({eulerop::to_string(x), re, im});
        pts.push_back({{"x", eulerop::to_string(x)}, {"re_y", re}, {"im_y", im}});
    }
    out.doc = {{"n", o.n},
               {"c", eulerop::to_string(c)},
               {"mu", eulerop::to_string(mu)},
               {"alpha", {{"re", dec(s.alpha.re, o.digits)}, {"im", dec(s.alpha.im, o.digits)}}},
               {"K", o.K},
               {"points", pts}};
    return out;
}

void emit(const Output& out, Format fmt, const std::string& path) {
    std::ostringstream text;
    if (fmt == Format::json)
        text << out.doc.dump(2) << '\n';
    else
        for (const auto& r : out.rows) text << csv_line(r);
    if (path.empty() || path == "-") {
        std::cout << text.str();
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << text.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thresholds, L2 solution counts and numeric evidence for (-1)^n d^2n/dx^2n + c x^-2n"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        std::function<Output(const Options&)> run;
        Format default_format;
        std::vector<std::string> flags;
    };
    const std::vector<Command> commands = {
        {"thresholds", "threshold set c_n^(1) < ... < c_n^(n)", cmd_thresholds, Format::json, {"n", "digits"}},
        {"classify", "number of L2 solutions near 0", cmd_classify, Format::json, {"n", "c"}},
        {"deficiency", "deficiency indices of the minimal operator", cmd_deficiency, Format::json, {"n", "c"}},
        {"selfadjoint", "essential self-adjointness test", cmd_selfadjoint, Format::json, {"n", "c", "digits"}},
        {"bands", "maximal c-intervals of constant count", cmd_bands, Format::json, {"n", "digits"}},
        {"roots", "certified indicial roots", cmd_roots, Format::json, {"n", "c", "digits", "precision"}},
        {"hpoly", "the polynomial h_{n-1}(c)", cmd_hpoly, Format::json, {"n"}},
        {"orlando", "Orlando product versus h_{n-1}(c)", cmd_orlando, Format::json, {"n", "c", "digits", "precision"}},
        {"galois", "primes witnessing cycle types", cmd_galois, Format::json, {"n", "pmax"}},
        {"table-a1", "smallest cycle-type primes for n = 4..nmax", cmd_table_a1, Format::csv, {"nmax", "pmax"}},
        {"table-a2", "c_n versus (2n^2/pi)^(2n)", cmd_table_a2, Format::csv, {"nmax", "digits"}},
        {"table-a3", "2n^2/pi < c_n^(1/2n) < n/sin(pi/2n)", cmd_table_a3, Format::csv, {"nmax", "digits"}},
        {"figure1", "real parts of alpha_j and beta_j over x = sgn(c)|c|^(1/2n)", cmd_figure1, Format::csv,
         {"n", "grid", "digits", "precision"}},
        {"frobenius", "Frobenius series solution on a grid", cmd_frobenius, Format::csv,
         {"n", "c", "mu", "alpha-index", "K", "grid", "digits", "precision"}},
    };

    // Digits default differs per table; track whether the user set it.
    std::map<std::string, CLI::App*> subs;
    for (const auto& cmd : commands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        subs[cmd.name] = sub;
        auto has = [&](const char* f) { return std::find(cmd.flags.begin(), cmd.flags.end(), f) != cmd.flags.end(); };
        if (has("n")) sub->add_option("--n", o.n, "order parameter n >= 1")->required();
        if (has("c")) sub->add_option("--c", o.c, "coupling: exact p/q or a decimal literal (taken exactly)")->required();
        if (has("digits")) sub->add_option("--digits", o.digits, "significant digits in decimal output");
        if (has("precision")) sub->add_option("--precision", o.precision, "working precision in bits")->check(CLI::Range(53L, 1L << 20));
        if (has("grid")) sub->add_option("--grid", o.grid, "lo:hi:steps with exact rational endpoints");
        if (has("pmax")) sub->add_option("--pmax", o.pmax, "largest prime searched")->check(CLI::Range(2ULL, 1ULL << 40));
        if (has("nmax")) sub->add_option("--nmax", o.nmax, "largest n")->required();
        if (has("mu")) sub->add_option("--mu", o.mu, "spectral parameter mu (rational)");
        if (has("alpha-index")) sub->add_option("--alpha-index", o.alpha_index, "1-based exponent index");
        if (has("K")) sub->add_option("--K", o.K, "series truncation");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", o.output, "output file (default standard output)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (const auto& cmd : commands) {
        CLI::App* sub = subs[cmd.name];
        if (!sub->parsed()) continue;
        if (const CLI::Option* d = sub->get_option_no_throw("--digits"); d == nullptr || d->count() == 0) {
            if (std::string(cmd.name) == "table-a2") o.digits = 6;
            else if (std::string(cmd.name) == "table-a3") o.digits = 8;
            else if (std::string(cmd.name) == "figure1" || std::string(cmd.name) == "frobenius") o.digits = 12;
        }
        if (o.digits < 1 || o.digits > 1000) {
            std::cerr << "error: --digits must lie in 1..1000\n";
            return kExitUsage;
        }
        Format fmt = o.format.empty() ? cmd.default_format : (o.format == "csv" ? Format::csv : Format::json);
        try {
            emit(cmd.run(o), fmt, o.output);
            return 0;
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "computation error: " << e.what() << '\n';
            return kExitComputation;
        }
    }
    return kExitUsage;
}
