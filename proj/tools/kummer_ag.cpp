/*
   Copyright 2026 The kummer-ag Authors

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

// kummer-ag: command-line front end for the Kummer-curve AG code library.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kummer/agcode.hpp"
#include "kummer/config.hpp"
#include "kummer/examples.hpp"
#include "kummer/rrlattice.hpp"
#include "kummer/weierstrass.hpp"

using namespace kummer;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

struct Options {
    std::string command;
    std::optional<int> example;
    std::string config;
    std::string out;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> bound;
};

void csv_header(std::ostream& os, const PlaceTuple& t) {
    for (std::size_t k = 0; k < t.arity(); ++k) {
        const PlaceRef p = t.place(k);
        os << (k ? "," : "") << (p.infinity ? std::string("Pinf") : "P" + std::to_string(p.index));
    }
    os << '\n';
}

void csv_row(std::ostream& os, const std::vector<std::int64_t>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << '\n';
}

std::int64_t search_bound(const Options& opt, const JobConfig& cfg) {
    if (opt.bound) return *opt.bound;
    return cfg.maybe_integer("job", "bound").value_or(40);
}

int curve_info(std::ostream& os, const KummerCurve& c) {
    const auto places = c.enumerate_places();
    os << "field: " << c.field()->describe() << '\n'
       << "curve: " << c.describe() << '\n'
       << "m: " << c.m() << '\n'
       << "lambda: " << c.lambda() << '\n'
       << "r: " << c.r() << '\n'
       << "genus: " << c.genus() << '\n'
       << "rational places: " << places.size() << '\n'
       << "A B (A*lambda + B*m = 1): " << c.A() << ' ' << c.B() << '\n'
       << "a b (a*r + b*m = 1): " << c.a() << ' ' << c.b() << '\n';
    return 0;
}

int list_places(std::ostream& os, const KummerCurve& c) {
    os << "index,kind,label,x,y\n";
    std::size_t idx = 0;
    for (const RationalPlace& p : c.enumerate_places()) {
        const char* kind = p.is_infinity() ? "infinity" : p.is_ramified() ? "ramified" : "affine";
        os << idx++ << ',' << kind << ',' << p.label() << ',';
        if (p.is_infinity())
            os << ",\n";
        else
            os << p.x << ',' << p.y << '\n';
    }
    return 0;
}

int rr_basis(std::ostream& os, const KummerCurve& c, const Divisor& g) {
    const LatticeParams lp = c.lattice();
    for (const LatticePoint& pt : omega_enumerate(lp, g)) {
        os << pt.i;
        for (std::int64_t j : pt.j) os << ' ' << j;
        os << " |";
        const Divisor po = pole_orders(lp, pt);
        for (std::int64_t v : po.s) os << ' ' << v;
        os << ' ' << po.t << '\n';
    }
    return 0;
}

int semigroup(std::ostream& os, const JobConfig& cfg, const KummerCurve& c, const Options& opt) {
    const PlaceTuple t = cfg.places("places");
    const LatticeParams lp = c.lattice();
    if (cfg.has("job", "coords")) {
        os << (semigroup_member(lp, t, cfg.integers("job", "coords")) ? "member" : "not a member") << '\n';
        return 0;
    }
    t.validate(lp);
    const std::int64_t bound = search_bound(opt, cfg);
    csv_header(os, t);
    std::vector<std::int64_t> pt(t.arity(), 0);
    while (true) {
        if (semigroup_member(lp, t, pt)) csv_row(os, pt);
        std::size_t d = pt.size();
        while (d > 0) {
            --d;
            if (pt[d] < bound) {
                ++pt[d];
                break;
            }
            pt[d] = 0;
            if (d == 0) return 0;
        }
    }
}

int pure_gaps(std::ostream& os, const JobConfig& cfg, const KummerCurve& c, const Options& opt) {
    const PlaceTuple t = cfg.places("places");
    const LatticeParams lp = c.lattice();
    if (cfg.has("job", "coords")) {
        os << (pure_gap(lp, t, cfg.integers("job", "coords")) ? "pure gap" : "not a pure gap") << '\n';
        return 0;
    }
    csv_header(os, t);
    for (const auto& pt : pure_gaps_in_box(lp, t, search_bound(opt, cfg))) csv_row(os, pt);
    return 0;
}

int box_search_cmd(std::ostream& os, const JobConfig& cfg, const KummerCurve& c, const Options& opt) {
    const PlaceTuple t = cfg.places("places");
    const LatticeParams lp = c.lattice();
    for (const BoxCandidate& cand : box_search(lp, t, search_bound(opt, cfg))) {
        os << "gain=" << cand.gain << " deg=" << cand.divisor.degree() << " bound="
           << cand.divisor.degree() - (2 * lp.genus - 2) + cand.gain << " base=";
        for (std::size_t k = 0; k < cand.box.base.size(); ++k) os << (k ? "," : "") << cand.box.base[k];
        os << " widths=";
        for (std::size_t k = 0; k < cand.box.widths.size(); ++k) os << (k ? "," : "") << cand.box.widths[k];
        os << " G=" << cand.divisor << '\n';
    }
    return 0;
}

LinearCode build(const JobConfig& cfg, const KummerCurve& c, const Options& opt, EvaluationSet& d) {
    const Divisor g = cfg.divisor("divisor", c.r());
    std::optional<std::size_t> n;
    if (auto v = cfg.maybe_integer("job", "n")) n = static_cast<std::size_t>(*v);
    std::optional<std::uint64_t> seed = opt.seed;
    if (!seed)
        if (auto v = cfg.maybe_integer("job", "seed")) seed = static_cast<std::uint64_t>(*v);
    d = EvaluationSet::complement(c, g, n, seed);
    const std::string kind = cfg.has("job", "code") ? cfg.text("job", "code") : "omega";
    if (kind == "L") return build_CL(c, g, d);
    if (kind != "omega") throw ConfigError("[job] code: expected omega or L, got '" + kind + "'");
    return build_COmega(c, g, d);
}

void code_summary(std::ostream& os, const JobConfig& cfg, const LinearCode& code, const EvaluationSet& d) {
    os << "# code " << (cfg.has("job", "code") ? cfg.text("job", "code") : "omega") << " n=" << code.n
       << " k=" << code.k << " q=" << code.generator.field()->q() << '\n';
    os << "# D:";
    for (const RationalPlace& p : d.places()) os << ' ' << p.label();
    os << '\n';
    if (!d.dropped().empty()) {
        os << "# dropped:";
        for (const RationalPlace& p : d.dropped()) os << ' ' << p.label();
        os << '\n';
    }
    for (const DesignedBound& b : code.bounds) {
        os << "# bound " << b.name << ' ' << b.value;
        if (!b.detail.empty()) os << ' ' << b.detail;
        os << '\n';
    }
}

int build_code(std::ostream& os, const JobConfig& cfg, const KummerCurve& c, const Options& opt) {
    EvaluationSet d = EvaluationSet::create(c, Divisor::zero(static_cast<std::size_t>(c.r())), {});
    const LinearCode code = build(cfg, c, opt, d);
    code_summary(os, cfg, code, d);
    if (opt.out.empty()) {
        write_matrix(os, code);
    } else {
        std::ofstream f(opt.out);
        if (!f) throw ConfigError(opt.out + ": cannot open for writing");
        write_matrix(f, code);
        os << "# matrix written to " << opt.out << '\n';
    }
    return 0;
}

int check_distance(std::ostream& os, const JobConfig& cfg, const KummerCurve& c, const Options& opt) {
    EvaluationSet d = EvaluationSet::create(c, Divisor::zero(static_cast<std::size_t>(c.r())), {});
    const LinearCode code = build(cfg, c, opt, d);
    code_summary(os, cfg, code, d);
    std::uint64_t budget = kDefaultBudget;
    if (opt.budget)
        budget = *opt.budget;
    else if (auto v = cfg.maybe_integer("job", "budget"))
        budget = static_cast<std::uint64_t>(*v);
    const DistanceResult res = brute_force_distance(code, budget);
    if (!res.distance) {
        os << "distance: undefined (k = 0)\n";
        return 0;
    }
    os << "distance: " << *res.distance << " (" << res.codewords << " nonzero codewords)\n";
    bool ok = true;
    for (const DesignedBound& b : code.bounds) {
        const bool holds = b.value <= static_cast<std::int64_t>(*res.distance);
        ok = ok && holds;
        os << (holds ? "PASS" : "FAIL") << " bound " << b.name << ' ' << b.value << " <= " << *res.distance << '\n';
    }
    return ok ? 0 : kExitFailed;
}

int run(const Options& opt) {
    if (opt.command == "verify-example") {
        if (!opt.example) throw ConfigError("verify-example needs an example number 1..4");
        const examples::Report report = examples::verify(*opt.example);
        examples::print(std::cout, report);
        return report.passed() ? 0 : kExitFailed;
    }
    if (opt.config.empty()) throw ConfigError(opt.command + ": --config is required");
    JobConfig cfg = JobConfig::load(opt.config);
    const KummerCurve c = cfg.curve();
    std::ostream& os = std::cout;
    if (opt.command == "curve-info") return curve_info(os, c);
    if (opt.command == "places") return list_places(os, c);
    if (opt.command == "rr-basis") return rr_basis(os, c, cfg.divisor("divisor", c.r()));
    if (opt.command == "dim") {
        os << dimension(c, cfg.divisor("divisor", c.r())) << '\n';
        return 0;
    }
    if (opt.command == "semigroup") return semigroup(os, cfg, c, opt);
    if (opt.command == "pure-gaps") return pure_gaps(os, cfg, c, opt);
    if (opt.command == "box-search") return box_search_cmd(os, cfg, c, opt);
    if (opt.command == "floor") {
        const Divisor fl = floor_divisor(c, cfg.divisor("divisor", c.r()));
        for (auto v : fl.s) os << v << ' ';
        os << fl.t << '\n';
        return 0;
    }
    if (opt.command == "build-code") return build_code(os, cfg, c, opt);
    if (opt.command == "check-distance") return check_distance(os, cfg, c, opt);
    throw ConfigError("unknown command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Roch bases, Weierstrass semigroups and AG codes on Kummer curves"};
    Options opt;
    app.add_option("command", opt.command, "subcommand")
        ->required()
        ->check(CLI::IsMember({"curve-info", "places", "rr-basis", "dim", "semigroup", "pure-gaps", "box-search",
                               "floor", "build-code", "check-distance", "verify-example"}));
    app.add_option("example", opt.example, "example number for verify-example");
    app.add_option("--config", opt.config, "job configuration file");
    app.add_option("--out", opt.out, "write the generator matrix here");
    app.add_option("--budget", opt.budget, "maximum number of codewords for check-distance");
    app.add_option("--seed", opt.seed, "seed for choosing which places to drop from D");
    app.add_option("--bound", opt.bound, "coordinate bound for semigroup, pure-gaps and box-search");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }
    try {
        return run(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}
