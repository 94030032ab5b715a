#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgh/derivative.hpp"
#include "sgh/monotonicity.hpp"
#include "sgh/third_point.hpp"
#include "sgh/verify.hpp"

namespace sgh::cli {

using nlohmann::json;

namespace {

constexpr unsigned kMaxScanDepth = 20;

std::string shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json inputs_json(const RunConfig& cfg) {
    json in{{"alpha", cfg.bv.alpha.to_string()},
            {"beta", cfg.bv.beta.to_string()},
            {"gamma", cfg.bv.gamma.to_string()},
            {"edge", std::string(to_string(cfg.edge))},
            {"depth", cfg.depth}};
    if (cfg.point) in["point"] = cfg.point->to_string();
    return in;
}

json envelope(const RunConfig& cfg, json results) {
    return json{{"command", cfg.command}, {"inputs", inputs_json(cfg)}, {"results", std::move(results)},
                {"suites", json::array()}};
}

void csv_header(std::ostream& out) { out << "x_num,x_den,f_num,f_den,f_float\n"; }

void csv_row(std::ostream& out, const Rational& x, const Rational& f) {
    out << x.numerator().get_str() << ',' << x.denominator().get_str() << ',' << f.numerator().get_str() << ','
        << f.denominator().get_str() << ',' << shortest(f.to_double()) << '\n';
}

json extremum_json(const ExtremumLocation& loc) {
    json j{{"kind", std::string(to_string(loc.kind))}};
    if (const auto* at = std::get_if<ExtremumAtJunction>(&loc.where)) {
        j["at_junction"] = at->position.to_string();
    } else {
        const auto& iv = std::get<DyadicInterval>(loc.where);
        j["interval"] = {iv.lo.to_string(), iv.hi.to_string()};
    }
    return j;
}

std::string extremum_text(const ExtremumLocation& loc) {
    std::string s(to_string(loc.kind));
    if (const auto* at = std::get_if<ExtremumAtJunction>(&loc.where)) {
        return s + " exactly at junction " + at->position.to_string();
    }
    const auto& iv = std::get<DyadicInterval>(loc.where);
    return s + " in [" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
}

std::string classes_text(const JunctionDerivative& jd) {
    std::string s;
    if (jd.left) s += "left=" + std::string(to_string(*jd.left));
    if (jd.right) s += std::string(s.empty() ? "" : " ") + "right=" + std::string(to_string(*jd.right));
    return s;
}

}  // namespace

Rational parse_point(const std::string& text) {
    const auto caret = text.find("/2^");
    if (caret == std::string::npos) return Rational::parse(text);
    const Rational k = Rational::parse(text.substr(0, caret));
    const std::string exp_text = text.substr(caret + 3);
    unsigned m = 0;
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), m);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || !k.is_integer()) {
        throw ParseError("malformed point '" + text + "'");
    }
    return k * Rational::inverse_power_of_two(m);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.point) throw PreconditionError("eval needs --point");
    const Rational value = eval_point(cfg.bv, {cfg.edge, *cfg.point});
    switch (cfg.format) {
        case Format::Human:
            out << value << " (" << shortest(value.to_double()) << ")\n";
            break;
        case Format::Json:
            out << envelope(cfg, {{"value", value.to_string()}, {"float", value.to_double()}}).dump(2) << '\n';
            break;
        case Format::Csv:
            csv_header(out);
            csv_row(out, *cfg.point, value);
            break;
    }
    return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const auto& bv = cfg.bv;
    const auto sides = side_lengths(bv);
    json edges = json::object();
    std::ostringstream human;
    human << "f = " << to_string(bv) << '\n';
    human << "side lengths: |alpha-beta|=" << sides.left << " |alpha-gamma|=" << sides.right
          << " |beta-gamma|=" << sides.bottom << " (descending: ";
    json order = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        human << (i ? ", " : "") << to_string(sides.descending[i]);
        order.push_back(std::string(to_string(sides.descending[i])));
    }
    human << ")\n";

    for (Edge e : kAllEdges) {
        const auto cls = classify_edge(bv, e);
        json entry{{"class", std::string(to_string(cls))}, {"dsv", dsv_check(bv, e)}};
        human << to_string(e) << ": " << to_string(cls);
        if (cls == MonotonicityClass::NonMonotone) {
            const auto loc = locate_extremum(bv, e, cfg.depth);
            entry["extremum"] = extremum_json(loc);
            human << ", " << extremum_text(loc) << " (depth " << cfg.depth << ")";
        }
        human << '\n';
        edges[std::string(to_string(e))] = std::move(entry);
    }

    json simultaneous = nullptr;
    if (!bv.is_constant()) simultaneous = simultaneous_monotone(bv);
    human << "simultaneously strictly monotone: "
          << (bv.is_constant() ? "n/a (constant)" : (simultaneous.get<bool>() ? "yes" : "no")) << '\n';

    if (cfg.format == Format::Json) {
        json sl{{"left", sides.left.to_string()}, {"right", sides.right.to_string()},
                {"bottom", sides.bottom.to_string()}, {"descending", order}};
        out << envelope(cfg, {{"edges", edges}, {"simultaneous", simultaneous}, {"side_lengths", sl}}).dump(2)
            << '\n';
    } else {
        out << human.str();
    }
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.depth > kMaxScanDepth) {
        throw PreconditionError("scan depth " + std::to_string(cfg.depth) + " exceeds " +
                                std::to_string(kMaxScanDepth));
    }
    const auto values = sample_bottom(relabel_to_bottom(cfg.bv, cfg.edge), cfg.depth);
    const mpz_class den = mpz_class(1) << cfg.depth;
    csv_header(out);
    for (std::size_t k = 0; k < values.size(); ++k) {
        csv_row(out, Rational(mpz_class(static_cast<unsigned long>(k)), den), values[k]);
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    verify::Config vc;
    vc.trials = cfg.trials;
    vc.depth = cfg.depth;
    vc.m_max = cfg.m_max;
    vc.seed = cfg.seed;
    if (cfg.triple_given) vc.triple = cfg.bv;

    std::vector<verify::SuiteResult> results;
    if (cfg.suite == "all") {
        results = verify::run_all(vc);
    } else {
        results.push_back(verify::run(cfg.suite, vc));
    }

    bool all_passed = true;
    json suites = json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        json details = r.details;
        if (r.counterexample) details.push_back("counterexample: " + *r.counterexample);
        suites.push_back({{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"details", details}});
    }

    if (cfg.format == Format::Json) {
        json doc = envelope(cfg, {{"passed", all_passed}});
        doc["inputs"]["suite"] = cfg.suite;
        doc["inputs"]["trials"] = cfg.trials;
        doc["inputs"]["m_max"] = cfg.m_max;
        doc["inputs"]["seed"] = cfg.seed;
        doc["suites"] = std::move(suites);
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
            for (const auto& d : r.details) out << "    " << d << '\n';
            if (r.counterexample) out << "    counterexample: " << *r.counterexample << '\n';
        }
    }
    return all_passed ? kOk : kVerificationFailed;
}

int cmd_zero_search(const RunConfig& cfg, std::ostream& out) {
    const auto zeros = zero_junctions(cfg.bv, cfg.depth);
    const auto relations = integer_relations(cfg.bv, cfg.bound);

    if (cfg.format == Format::Json) {
        json zs = json::array();
        for (const auto& z : zeros) {
            json obs = json::array();
            for (const auto& o : z.observations) {
                json c{{"edge", std::string(to_string(o.edge))}};
                if (o.classes.left) c["left"] = std::string(to_string(*o.classes.left));
                if (o.classes.right) c["right"] = std::string(to_string(*o.classes.right));
                obs.push_back(std::move(c));
            }
            zs.push_back({{"point", z.point.to_string()}, {"observations", obs}});
        }
        json doc = envelope(cfg, {{"zero_count", zeros.size()}, {"zeros", zs}, {"relations", relations}});
        doc["inputs"]["bound"] = cfg.bound;
        out << doc.dump(2) << '\n';
        return kOk;
    }

    out << "zero-derivative junctions up to depth " << cfg.depth << ": " << zeros.size() << '\n';
    for (const auto& z : zeros) {
        out << "  " << z.point.to_string();
        for (const auto& o : z.observations) out << "  [" << to_string(o.edge) << ": " << classes_text(o.classes) << "]";
        out << '\n';
    }
    out << "relations n*alpha + m*beta + k*gamma = 0 with n+m+k = 0, |coefficients| <= " << cfg.bound << ": "
        << relations.size() << '\n';
    for (const auto& r : relations) out << "  (" << r[0] << ", " << r[1] << ", " << r[2] << ")\n";
    return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact harmonic functions on the Sierpinski gasket", "sgharm"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string alpha = "0", beta = "0", gamma = "1";
    std::string edge = "bottom", point, format = "human";

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("-a,--alpha", alpha, "f(p0), rational p/q");
        sub->add_option("-b,--beta", beta, "f(p1), rational p/q");
        sub->add_option("-g,--gamma", gamma, "f(p2), rational p/q");
        sub->add_option("--format", format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("-o,--output", cfg.output_path, "write output to this file");
    };

    auto* eval = app.add_subcommand("eval", "value at a dyadic or sub-edge third point");
    add_triple(eval);
    eval->add_option("--edge", edge, "bottom, left or right");
    eval->add_option("--point", point, "position k/2^m or a third point such as 1/3")->required();

    auto* classify = app.add_subcommand("classify", "monotonicity of the three edge restrictions");
    add_triple(classify);
    classify->add_option("--depth", cfg.depth, "bisection depth for extremum brackets");

    auto* scan = app.add_subcommand("scan", "CSV samples at k/2^depth along an edge");
    add_triple(scan);
    scan->add_option("--edge", edge, "bottom, left or right");
    scan->add_option("--depth", cfg.depth, "sampling depth (<= 20)");

    auto* verify = app.add_subcommand("verify", "run self-check suites");
    add_triple(verify);
    verify->add_option("--suite", cfg.suite, "suite name or 'all'");
    verify->add_option("--trials", cfg.trials, "random triples per suite");
    verify->add_option("--depth", cfg.depth, "scan depth / oracle level");
    verify->add_option("--m-max", cfg.m_max, "largest m for recursion suites");
    verify->add_option("--seed", cfg.seed, "random seed");

    auto* zero = app.add_subcommand("zero-search", "zero-derivative junctions and integer relations");
    add_triple(zero);
    zero->add_option("--depth", cfg.depth, "scan depth");
    zero->add_option("--bound", cfg.bound, "largest |coefficient| in relation search");

    std::vector<const char*> argv{"sgharm"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        const auto* sub = app.get_subcommands().front();
        cfg.triple_given = sub->count("--alpha") + sub->count("--beta") + sub->count("--gamma") > 0;
        cfg.bv = {Rational::parse(alpha), Rational::parse(beta), Rational::parse(gamma)};
        cfg.edge = parse_edge(edge);
        if (!point.empty()) cfg.point = parse_point(point);
        cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Human);

        std::unique_ptr<std::ofstream> file;
        std::ostream* sink = &out;
        if (!cfg.output_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.output_path);
            if (!*file) throw PreconditionError("cannot open '" + cfg.output_path + "' for writing");
            sink = file.get();
        }

        if (cfg.command == "eval") return cmd_eval(cfg, *sink);
        if (cfg.command == "classify") return cmd_classify(cfg, *sink);
        if (cfg.command == "scan") return cmd_scan(cfg, *sink);
        if (cfg.command == "verify") return cmd_verify(cfg, *sink);
        return cmd_zero_search(cfg, *sink);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace sgh::cli
