#include "starring/enumerate.hpp"
#include "starring/errors.hpp"
#include "starring/ginverse.hpp"
#include "starring/io.hpp"
#include "starring/ring.hpp"
#include "starring/sweep.hpp"
#include "starring/theorems.hpp"
#include "starring/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace starring;

struct Args {
    std::string ring_text;
    std::string element_text;
    std::string theorem;
    unsigned max_n = 1;
    unsigned max_m = 1;
    unsigned workers = 0;
    bool oracle = false;
    bool as_json = false;
    std::string out_path;
};

/** --ring accepts inline JSON or @path-to-file. */
std::string load_text(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw ParseError("cannot read file " + text.substr(1));
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_out(const Args& args, const json& j) {
    if (args.out_path.empty()) return;
    std::ofstream out(args.out_path);
    if (!out) throw Error("cannot write " + args.out_path);
    out << j.dump(2) << '\n';
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_validate_ring(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    ValidationReport rep = validate_ring(r);
    json j = {
        {"ring", ring_to_json(r)},
        {"ok", rep.ok},
        {"exhaustive_pairs", rep.exhaustive_pairs},
        {"exhaustive_triples", rep.exhaustive_triples},
        {"pairs_checked", rep.pairs_checked},
        {"triples_checked", rep.triples_checked},
        {"sample_seed", rep.sample_seed},
        {"first_violation", rep.first_violation},
    };
    write_out(args, j);
    if (args.as_json) {
        print_json(j);
    } else {
        std::cout << r.name() << ": " << (rep.ok ? "all axioms hold" : "axiom violation") << '\n';
        std::cout << "  pairs checked: " << rep.pairs_checked
                  << (rep.exhaustive_pairs ? " (exhaustive)" : " (sampled)") << '\n';
        std::cout << "  triples checked: " << rep.triples_checked
                  << (rep.exhaustive_triples ? " (exhaustive)" : " (sampled)") << '\n';
        if (!rep.ok) std::cout << "  first violation: " << rep.first_violation << '\n';
    }
    return rep.ok ? 0 : 1;
}

int run_classify(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    Element a = parse_element_text(r, load_text(args.element_text));
    ElementFlags f = classify(a);
    bool ep = is_EP(a);
    bool cancellable = is_star_cancellable(a);
    json j = {
        {"ring", ring_to_json(r)},
        {"element", element_to_json(a)},
        {"idempotent", f.idempotent},
        {"hermitian", f.hermitian},
        {"projection", f.projection},
        {"normal", f.normal},
        {"unit", f.unit},
        {"left_invertible", f.left_invertible},
        {"right_invertible", f.right_invertible},
        {"ep", ep},
        {"star_cancellable", cancellable},
    };
    write_out(args, j);
    if (args.as_json) {
        print_json(j);
    } else {
        std::cout << format_element(a) << " in " << r.name() << ":\n";
        std::cout << "  idempotent: " << yesno(f.idempotent) << '\n';
        std::cout << "  hermitian: " << yesno(f.hermitian) << '\n';
        std::cout << "  projection: " << yesno(f.projection) << '\n';
        std::cout << "  normal: " << yesno(f.normal) << '\n';
        std::cout << "  unit: " << yesno(f.unit) << '\n';
        std::cout << "  left invertible: " << yesno(f.left_invertible) << '\n';
        std::cout << "  right invertible: " << yesno(f.right_invertible) << '\n';
        std::cout << "  EP: " << yesno(ep) << '\n';
        std::cout << "  star-cancellable: " << yesno(cancellable) << '\n';
    }
    return 0;
}

json inverse_to_json(const RingDescriptor& r, const Element& a, const InverseResult& res) {
    json cert = json::array();
    for (const auto& [name, value] : res.certificate)
        cert.push_back({{"name", name}, {"element", element_to_json(value)}});
    return {
        {"ring", ring_to_json(r)},
        {"element", element_to_json(a)},
        {"exists", res.value.has_value()},
        {"value", res.value ? element_to_json(*res.value) : json()},
        {"certificate", cert},
        {"reason", res.reason},
    };
}

void print_inverse(const char* label, const InverseResult& res) {
    if (res.value) {
        std::cout << format_element(*res.value) << '\n';
        for (const auto& [name, value] : res.certificate)
            std::cout << "  " << name << ": " << format_element(value) << '\n';
    } else {
        std::cout << label << " does not exist: " << res.reason << '\n';
    }
}

int run_mp(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    Element a = parse_element_text(r, load_text(args.element_text));
    InverseResult res = moore_penrose(a);
    json j = inverse_to_json(r, a, res);
    int status = 0;
    if (args.oracle) {
        InverseResult scan = mp_oracle(a);
        bool agrees = scan.value.has_value() == res.value.has_value() &&
                      (!scan.value || *scan.value == *res.value);
        j["oracle_agrees"] = agrees;
        if (!agrees) status = 1;
    }
    write_out(args, j);
    if (args.as_json)
        print_json(j);
    else {
        print_inverse("Moore-Penrose inverse", res);
        if (args.oracle)
            std::cout << "  oracle agrees: " << yesno(j["oracle_agrees"].get<bool>()) << '\n';
    }
    return status;
}

int run_ginv(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    Element a = parse_element_text(r, load_text(args.element_text));
    InverseResult res = group_inverse(a);
    json j = inverse_to_json(r, a, res);
    int status = 0;
    if (args.oracle && res.value) {
        const Element& b = *res.value;
        bool agrees = mul(mul(a, b), a) == a && mul(b, mul(a, b)) == b && mul(a, b) == mul(b, a);
        j["oracle_agrees"] = agrees;
        if (!agrees) status = 1;
    }
    write_out(args, j);
    if (args.as_json)
        print_json(j);
    else
        print_inverse("group inverse", res);
    return status;
}

int run_verify(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    SweepOptions opt;
    opt.n_hi = args.max_n;
    opt.m_hi = args.max_m;
    opt.workers = args.workers;
    opt.oracle_cross_check = args.oracle;
    VerificationReport rep = verify_theorem(r, args.theorem, opt);
    json j = report_to_json(rep);
    write_out(args, j);
    if (args.as_json) {
        print_json(j);
    } else {
        std::cout << rep.theorem_id << " on " << r.name() << ": " << rep.elements_scanned
                  << " elements, n in [" << rep.n_lo << "," << rep.n_hi << "], m in [" << rep.m_lo
                  << "," << rep.m_hi << "]\n";
        for (const auto& [id, ok] : rep.agreement)
            std::cout << "  " << id << ": " << (ok ? "ok" : "FAIL") << '\n';
        std::cout << rep.counterexamples.size() << " counterexamples in " << rep.elapsed_ms
                  << " ms\n";
        std::size_t shown = 0;
        for (const Counterexample& cex : rep.counterexamples) {
            if (shown++ == 10) {
                std::cout << "  ...\n";
                break;
            }
            std::cout << "  index " << cex.element_index << " (" << cex.element << ") "
                      << cex.condition_id << ": " << cex.details << '\n';
        }
    }
    return rep.all_agree() ? 0 : 1;
}

int run_decompose(const Args& args) {
    RingDescriptor r = parse_ring_text(load_text(args.ring_text));
    Element a = parse_element_text(r, load_text(args.element_text));
    bool truth = mp_oracle(a).value.has_value();
    ElementStream stream(r);
    json variants = json::array();
    bool all_agree = true;
    if (!args.as_json)
        std::cout << format_element(a) << " in " << r.name()
                  << ": inverse exists: " << yesno(truth) << '\n';
    for (unsigned n = 1; n <= args.max_n; ++n) {
        for (int variant = 1; variant <= 8; ++variant) {
            DecompositionCheck d = t39_decomposition(a, n, variant);
            bool agrees = d.holds == truth;
            all_agree = all_agree && agrees;
            variants.push_back({
                {"n", n},
                {"variant", variant},
                {"holds", d.holds},
                {"sum_is_ring", d.sum_is_ring},
                {"intersection_trivial", d.intersection_trivial},
                {"annihilator_indices", d.annihilator_part.indices},
                {"multiple_indices", d.multiple_part.indices},
                {"agrees_with_existence", agrees},
            });
            if (!args.as_json) {
                std::cout << "  n=" << n << " variant " << variant << ": "
                          << (d.holds ? "holds" : "fails") << " (sum covers ring: "
                          << yesno(d.sum_is_ring)
                          << ", intersection trivial: " << yesno(d.intersection_trivial)
                          << "), annihilator " << d.annihilator_part.size() << " elements, multiples "
                          << d.multiple_part.size() << " elements"
                          << (agrees ? "" : "  [DISAGREES with existence]") << '\n';
                if (stream.size() <= 32) {
                    std::cout << "    annihilator: {";
                    for (std::size_t i = 0; i < d.annihilator_part.indices.size(); ++i)
                        std::cout << (i ? ", " : "")
                                  << format_element(stream.at(d.annihilator_part.indices[i]));
                    std::cout << "}\n    multiples: {";
                    for (std::size_t i = 0; i < d.multiple_part.indices.size(); ++i)
                        std::cout << (i ? ", " : "")
                                  << format_element(stream.at(d.multiple_part.indices[i]));
                    std::cout << "}\n";
                }
            }
        }
    }
    json j = {
        {"ring", ring_to_json(r)},
        {"element", element_to_json(a)},
        {"inverse_exists", truth},
        {"variants", variants},
    };
    write_out(args, j);
    if (args.as_json) print_json(j);
    return all_agree ? 0 : 1;
}

void add_common(CLI::App* cmd, Args& args, bool needs_element) {
    cmd->add_option("--ring", args.ring_text, "ring descriptor, inline JSON or @file")->required();
    if (needs_element)
        cmd->add_option("--element", args.element_text, "element value, inline JSON or @file")
            ->required();
    cmd->add_flag("--json", args.as_json, "print the JSON report instead of text");
    cmd->add_option("--out", args.out_path, "also write the JSON report to this file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized inverses in rings with involution"};
    app.require_subcommand(1);
    Args args;

    CLI::App* validate = app.add_subcommand("validate-ring", "check the *-ring axioms on a carrier");
    add_common(validate, args, false);

    CLI::App* classify_cmd = app.add_subcommand("classify", "structural flags of one element");
    add_common(classify_cmd, args, true);

    CLI::App* mp = app.add_subcommand("mp", "Moore-Penrose inverse with certificate trail");
    add_common(mp, args, true);
    mp->add_flag("--oracle", args.oracle, "cross-check against the exhaustive/factorization oracle");

    CLI::App* ginv = app.add_subcommand("ginv", "group inverse");
    add_common(ginv, args, true);
    ginv->add_flag("--oracle", args.oracle, "re-check the defining equations");

    CLI::App* verify = app.add_subcommand("verify", "sweep a theorem over a finite carrier");
    add_common(verify, args, false);
    verify->add_option("--theorem", args.theorem, "theorem id, e.g. T3.1")->required();
    verify->add_option("--max-n", args.max_n, "top of the n range (from 1)");
    verify->add_option("--max-m", args.max_m, "top of the m range (from 1)");
    verify->add_flag("--oracle", args.oracle, "add the pipeline-vs-oracle cross check");
    verify->add_option("--workers", args.workers, "worker threads (0: hardware default)");

    CLI::App* decompose = app.add_subcommand("decompose", "annihilator/ideal decompositions");
    add_common(decompose, args, true);
    decompose->add_option("--max-n", args.max_n, "top of the n range (from 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate_ring(args);
        if (classify_cmd->parsed()) return run_classify(args);
        if (mp->parsed()) return run_mp(args);
        if (ginv->parsed()) return run_ginv(args);
        if (verify->parsed()) return run_verify(args);
        if (decompose->parsed()) return run_decompose(args);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
