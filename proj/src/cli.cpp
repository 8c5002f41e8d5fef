#include "yfrieze/cli.hpp"

#include "yfrieze/enumerate.hpp"
#include "yfrieze/gca2.hpp"
#include "yfrieze/mutation.hpp"
#include "yfrieze/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace yfrieze {

namespace {

using ojson = nlohmann::ordered_json;

// Raised for failed checks; becomes exit code 2.
struct CheckFailed {
    ojson report;
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) throw ParseError("range '" + s + "' must look like lo..hi");
    try {
        std::size_t used = 0;
        const long lo = std::stol(s.substr(0, pos), &used);
        if (used != pos) throw ParseError("bad range '" + s + "'");
        const auto rest = s.substr(pos + 2);
        const long hi = std::stol(rest, &used);
        if (used != rest.size()) throw ParseError("bad range '" + s + "'");
        if (hi < lo) throw ParseError("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("bad range '" + s + "'");
    }
}

std::string read_input(const std::string& path) {
    std::ostringstream os;
    if (path.empty() || path == "-") {
        os << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        os << in.rdbuf();
    }
    return os.str();
}

struct CartanOpts {
    std::string type;
    std::string matrix;

    void add(CLI::App* app) {
        app->add_option("--type,-t", type, "Cartan type such as A3, C2, G2, A1~");
        app->add_option("--cartan", matrix, "Cartan matrix literal, rows separated by ';'");
    }
    CartanMatrix get() const {
        if (!type.empty() && !matrix.empty()) throw ParseError("give either --type or --cartan, not both");
        if (type.empty() && matrix.empty()) throw ParseError("a Cartan matrix is required (--type or --cartan)");
        return parse_cartan(type.empty() ? matrix : type);
    }
};

long default_hi(const CartanMatrix& a) {
    if (a.recognition() && is_finite_type(a)) return coxeter_number(a) + 2;
    return 4;
}

std::vector<SemiringValue> parse_initial(const std::string& text, const SemiringId& s, std::size_t r) {
    std::vector<SemiringValue> out;
    if (text.empty()) {
        if (s.kind != SemiringKind::universal) throw ParseError("--initial is required for this semiring");
        for (std::size_t i = 0; i < r; ++i) out.push_back(SemiringValue::expression(RationalFn::variable(r, i)));
        return out;
    }
    for (const auto& part : split_top_level(text, ',')) out.push_back(sr_parse(s, part));
    if (out.size() != r)
        throw ParseError("expected " + std::to_string(r) + " initial values, got " + std::to_string(out.size()));
    return out;
}

void emit_window(std::ostream& out, const PatternWindow& w, const std::string& format, bool border) {
    if (format == "json") out << window_to_json(w) << '\n';
    else if (format == "csv") out << window_to_csv(w);
    else out << render_grid(w, border);
}

ojson glide_json(const GlideData& g) {
    ojson j;
    std::vector<std::size_t> inv;
    for (auto v : g.involution) inv.push_back(v + 1);
    j["involution"] = inv;
    j["shifts"] = g.shifts;
    j["coxeter_number"] = g.coxeter_number;
    j["period"] = g.period;
    return j;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frieze and Y-frieze patterns of Cartan matrices over exact semirings", "yfrieze"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    CartanOpts cartan;
    std::string kind = "y", semiring = "zpos", initial, cols, format = "grid", input, flavor = "y";
    bool border = false;
    std::int64_t cap = 0;
    unsigned threads = 1;

    // knit
    auto* knit_cmd = app.add_subcommand("knit", "Knit a pattern from its column-0 values");
    cartan.add(knit_cmd);
    knit_cmd->add_option("--kind,-k", kind, "frieze | y")->capture_default_str();
    knit_cmd->add_option("--semiring,-s", semiring, "zpos | qpos | tropn | trop | universal")->capture_default_str();
    knit_cmd->add_option("--initial,-i", initial, "Comma-separated column-0 values");
    knit_cmd->add_option("--cols", cols, "Column range lo..hi (default 0..h+2 in finite type, else 0..4)");
    knit_cmd->add_option("--format,-f", format, "grid | json | csv")->capture_default_str();
    knit_cmd->add_flag("--border", border, "Type A: add the rows of 1's or 0's");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a pattern window given as JSON");
    verify_cmd->add_option("--input", input, "JSON file, '-' for stdin")->capture_default_str();
    bool glide_too = false;
    verify_cmd->add_flag("--glide", glide_too, "Also check glide symmetry");

    // map
    auto* map_cmd = app.add_subcommand("map", "Send a frieze to its Y-frieze pattern");
    cartan.add(map_cmd);
    map_cmd->add_option("--semiring,-s", semiring, "Semiring of the frieze")->capture_default_str();
    map_cmd->add_option("--initial,-i", initial, "Column-0 values of the frieze");
    map_cmd->add_option("--cols", cols, "Column range of the frieze");
    map_cmd->add_option("--input", input, "Frieze window as JSON instead of --initial");
    map_cmd->add_option("--format,-f", format, "grid | json | csv")->capture_default_str();
    map_cmd->add_flag("--border", border, "Type A: add the rows of 0's");

    // mutate
    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a seed or list a mutation class");
    cartan.add(mutate_cmd);
    std::string bmatrix, sequence;
    bool orbit = false;
    mutate_cmd->add_option("--matrix,-b", bmatrix, "Mutation matrix literal (default B_A of the Cartan matrix)");
    mutate_cmd->add_option("--flavor", flavor, "a | y")->capture_default_str();
    mutate_cmd->add_option("--sequence", sequence, "Comma-separated 1-based directions");
    mutate_cmd->add_flag("--orbit", orbit, "Print the mutation class of the matrix");
    mutate_cmd->add_option("--format,-f", format, "grid | json")->capture_default_str();

    // belt
    auto* belt_cmd = app.add_subcommand("belt", "Belt variables x(i,m) or y(i,m) in the root cluster");
    cartan.add(belt_cmd);
    belt_cmd->add_option("--flavor", flavor, "a | y")->capture_default_str();
    belt_cmd->add_option("--cols", cols, "Range of m, lo..hi");
    bool check = false, unitary = false;
    belt_cmd->add_flag("--check", check, "Check the belt relations and Laurent positivity");
    belt_cmd->add_flag("--unitary", unitary, "Evaluate at the all-ones root point");
    belt_cmd->add_option("--format,-f", format, "grid | json")->capture_default_str();

    // gca
    auto* gca_cmd = app.add_subcommand("gca", "Rank-2 generalized cluster algebra with (1+t)^b, (1+t)^c");
    int b = 1, c = 1, maxk = 64, resolution = 64, extent = 8;
    std::string point, krange;
    bool region = false, phi = false;
    gca_cmd->add_option("-b", b, "Exponent b")->capture_default_str();
    gca_cmd->add_option("-c", c, "Exponent c")->capture_default_str();
    gca_cmd->add_option("--range", krange, "Print x_k for k in lo..hi");
    gca_cmd->add_option("--maxk", maxk, "Search / truncation bound")->capture_default_str();
    gca_cmd->add_option("--point", point, "Superunitary test at x1,x2");
    gca_cmd->add_flag("--region", region, "CSV raster of the superunitary region");
    gca_cmd->add_option("--resolution", resolution, "Raster steps per axis")->capture_default_str();
    gca_cmd->add_option("--extent", extent, "Raster covers [0,extent]^2")->capture_default_str();
    gca_cmd->add_flag("--phi", phi, "Check y(i,m) = x_{2m+i} over a period");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "All arithmetic patterns with column 0 in [1,cap]^r");
    cartan.add(enum_cmd);
    enum_cmd->add_option("--kind,-k", kind, "frieze | y")->capture_default_str();
    enum_cmd->add_option("--cap", cap, "Largest column-0 entry")->required();
    enum_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    std::string eformat = "json";
    enum_cmd->add_option("--format,-f", eformat, "json | grid")->capture_default_str();

    // tropical
    auto* trop_cmd = app.add_subcommand("tropical", "Tropical (max-plus) patterns in finite type");
    cartan.add(trop_cmd);
    trop_cmd->add_option("--kind,-k", kind, "frieze | y")->capture_default_str();
    std::int64_t box = -1;
    trop_cmd->add_option("--box", box, "Also brute-force column 0 over [0,box]^r");

    // glide
    auto* glide_cmd = app.add_subcommand("glide", "Glide data, optionally checked on a knitted pattern");
    cartan.add(glide_cmd);
    glide_cmd->add_option("--kind,-k", kind, "frieze | y")->capture_default_str();
    glide_cmd->add_option("--semiring,-s", semiring, "Semiring for --initial")->capture_default_str();
    glide_cmd->add_option("--initial,-i", initial, "Knit from these values and check the glide symmetry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (knit_cmd->parsed()) {
            const auto a = cartan.get();
            const auto s = SemiringId::parse(semiring, a.rank());
            const auto [lo, hi] = cols.empty() ? std::pair<long, long>{0, default_hi(a)} : parse_range(cols);
            const auto w = knit(a, s, parse_kind(kind), parse_initial(initial, s, a.rank()), lo, hi);
            emit_window(out, w, format, border);
            return 0;
        }
        if (verify_cmd->parsed()) {
            const auto w = window_from_json(read_input(input));
            ojson rep;
            const auto bad = first_violation(w);
            rep["relations"] = !bad;
            if (bad) rep["violation"] = {{"row", bad->row + 1}, {"col", bad->col}};
            bool ok = !bad;
            if (w.period()) {
                const bool per = has_period(w, *w.period());
                rep["period"] = per;
                ok = ok && per;
            }
            if (glide_too) {
                const bool g = check_glide(w);
                rep["glide"] = g;
                ok = ok && g;
            }
            rep["valid"] = ok;
            if (!ok) throw CheckFailed{rep};
            out << rep.dump() << '\n';
            return 0;
        }
        if (map_cmd->parsed()) {
            std::optional<PatternWindow> f;
            if (!input.empty()) {
                f = window_from_json(read_input(input));
            } else {
                const auto a = cartan.get();
                const auto s = SemiringId::parse(semiring, a.rank());
                const auto [lo, hi] = cols.empty() ? std::pair<long, long>{0, default_hi(a) + 1} : parse_range(cols);
                f = knit(a, s, PatternKind::frieze, parse_initial(initial, s, a.rank()), lo, hi);
            }
            const auto y = ensemble_image(*f);
            if (!verify(y)) throw InvariantViolation("image of a frieze fails the Y-relations");
            emit_window(out, y, format, border);
            return 0;
        }
        if (mutate_cmd->parsed()) {
            IntMatrix bm;
            if (!bmatrix.empty()) bm = IntMatrix::parse_literal(bmatrix);
            else bm = exchange_matrix(cartan.get());
            MutationMatrix::validate(bm);
            if (orbit) {
                ojson j = ojson::array();
                for (const auto& m : mutation_class(bm)) j.push_back(m.to_literal());
                if (format == "json") out << j.dump() << '\n';
                else
                    for (const auto& m : j) out << m.get<std::string>() << '\n';
                return 0;
            }
            auto seed = Seed::initial(bm, parse_flavor(flavor));
            if (!sequence.empty())
                for (const auto& part : split_top_level(sequence, ',')) {
                    int k = 0;
                    try {
                        k = std::stoi(part);
                    } catch (const std::logic_error&) {
                        throw ParseError("bad direction '" + part + "'");
                    }
                    if (k < 1 || static_cast<std::size_t>(k) > bm.rows())
                        throw ParseError("direction " + part + " out of range");
                    seed = mutate_seed(seed, static_cast<std::size_t>(k - 1));
                }
            const std::string prefix = seed.flavor == SeedFlavor::A ? "x" : "y";
            if (format == "json") {
                ojson j;
                j["flavor"] = flavor_name(seed.flavor);
                j["matrix"] = seed.matrix.to_literal();
                ojson vars = ojson::array();
                for (const auto& v : seed.vars) vars.push_back(v.to_string(prefix));
                j["vars"] = vars;
                out << j.dump() << '\n';
            } else {
                out << "B = " << seed.matrix.to_literal() << '\n';
                for (std::size_t i = 0; i < seed.vars.size(); ++i)
                    out << prefix << "'" << i + 1 << " = " << seed.vars[i].to_string(prefix) << '\n';
            }
            return 0;
        }
        if (belt_cmd->parsed()) {
            const auto a = cartan.get();
            const auto fl = parse_flavor(flavor);
            const auto [lo, hi] = cols.empty() ? std::pair<long, long>{0, default_hi(a)} : parse_range(cols);
            const auto t = belt(a, fl, lo, hi);
            const std::string name = fl == SeedFlavor::A ? "x" : "y";
            if (unitary) {
                auto w = unitary_pattern(t);
                emit_window(out, w, format, false);
            } else if (format == "json") {
                ojson j;
                j["cartan"] = a.describe();
                j["flavor"] = flavor_name(fl);
                j["cols"] = {t.lo(), t.hi()};
                ojson vals;
                for (long m = t.lo(); m <= t.hi(); ++m)
                    for (std::size_t i = 0; i < a.rank(); ++i)
                        vals[name + "(" + std::to_string(i + 1) + "," + std::to_string(m) + ")"] =
                            t.value(i, m).to_string(name);
                j["values"] = vals;
                out << j.dump() << '\n';
            } else {
                for (long m = t.lo(); m <= t.hi(); ++m)
                    for (std::size_t i = 0; i < a.rank(); ++i)
                        out << name << '(' << i + 1 << ',' << m << ") = " << t.value(i, m).to_string(name) << '\n';
            }
            if (check) {
                const auto rep = check_relations(t);
                ojson j{{"relations", rep.relations},         {"matrices", rep.matrices},
                        {"exchange_columns", rep.exchange_columns}, {"cluster_layout", rep.cluster_layout},
                        {"laurent_positive", rep.laurent_positive}, {"failures", rep.failures}};
                if (!rep.ok()) throw CheckFailed{j};
                err << j.dump() << '\n';
            }
            return 0;
        }
        if (gca_cmd->parsed()) {
            const auto p = GcaParams::validate(b, c);
            if (region) {
                out << region_csv(p, resolution, extent, maxk);
                return 0;
            }
            if (!point.empty()) {
                const auto parts = split_top_level(point, ',');
                if (parts.size() != 2) throw ParseError("--point needs two coordinates");
                mpq_class x1, x2;
                if (x1.set_str(parts[0], 10) != 0 || x2.set_str(parts[1], 10) != 0 || x1.get_den() == 0 ||
                    x2.get_den() == 0)
                    throw ParseError("bad point '" + point + "'");
                x1.canonicalize();
                x2.canonicalize();
                const auto r = superunitary_contains(p, x1, x2, maxk);
                out << ojson{{"b", b}, {"c", c}, {"point", {x1.get_str(), x2.get_str()}}, {"inside", r.inside},
                             {"truncated", r.truncated}, {"k_range", {r.lo, r.hi}}}
                           .dump()
                    << '\n';
                return 0;
            }
            const auto d = gca_period(p, maxk);
            if (phi) {
                const long span = d ? (*d + 1) / 2 + 1 : 4;
                const bool ok = phi_check(p.cartan(), -span, span);
                ojson j{{"b", b}, {"c", c}, {"m_range", {-span, span}}, {"phi", ok}};
                if (!ok) throw CheckFailed{j};
                out << j.dump() << '\n';
                return 0;
            }
            const auto [lo, hi] = krange.empty() ? std::pair<long, long>{1, d ? *d + 2 : 10} : parse_range(krange);
            const auto t = gca_variables(p, std::min(lo, 1L), std::max(hi, 2L));
            out << "period: " << (d ? std::to_string(*d) : "none up to " + std::to_string(maxk)) << '\n';
            for (long k = lo; k <= hi; ++k) out << 'x' << k << " = " << t.at(k).to_string() << '\n';
            return 0;
        }
        if (enum_cmd->parsed()) {
            const auto rep = enumerate_patterns(cartan.get(), parse_kind(kind), cap, threads);
            if (eformat == "json") {
                out << report_to_json(rep) << '\n';
            } else {
                out << rep.patterns.size() << " patterns (cap " << rep.cap << (rep.complete ? ", complete" : "")
                    << ")\n";
                for (const auto& v : rep.patterns) {
                    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
                    out << '\n';
                }
            }
            return 0;
        }
        if (trop_cmd->parsed()) {
            const auto a = cartan.get();
            const auto k = parse_kind(kind);
            const auto rep = k == PatternKind::yfrieze ? tropical_y_friezes(a) : tropical_friezes(a);
            ojson j;
            j["cartan"] = a.describe();
            j["kind"] = kind_name(k);
            j["coxeter_number"] = rep.coxeter_number;
            j["geometric_sum_zero"] = rep.geometric_sum_zero;
            j["solutions"] = rep.solutions;
            if (box >= 0) j["box_search"] = tropical_box_search(a, k, box);
            out << j.dump() << '\n';
            return 0;
        }
        if (glide_cmd->parsed()) {
            const auto a = cartan.get();
            const auto g = glide_data(a);
            auto j = glide_json(g);
            if (!initial.empty()) {
                const auto s = SemiringId::parse(semiring, a.rank());
                const auto w = knit(a, s, parse_kind(kind), parse_initial(initial, s, a.rank()), 0, g.period + 1);
                const bool ok = check_glide(w) && has_period(w, g.period);
                j["invariant"] = ok;
                if (!ok) throw CheckFailed{j};
            }
            out << j.dump() << '\n';
            return 0;
        }
    } catch (const KnitFailure& e) {
        ojson j{{"error", e.code()},
                {"at", {{"row", e.at().row + 1}, {"col", e.at().col}}},
                {"direction", e.direction() == KnitDirection::forward ? "forward" : "backward"},
                {"message", e.what()}};
        err << j.dump() << '\n';
        return 2;
    } catch (const CheckFailed& f) {
        err << f.report.dump() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << ojson{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const Error& e) {
        err << ojson{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 1;
}

} // namespace yfrieze
