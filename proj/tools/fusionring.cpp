// fusionring: command-line front end.
//
// Exit codes: 0 success, 1 a Fail / violation / obstruction was reported,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionring/fusionring.hpp"

namespace fr = fusionring;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fr::FusionRing load_ring(const std::string& path) {
    try {
        return fr::parse_spec(read_input(path));
    } catch (const fr::Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct Options {
    std::string format = "text";
    std::string seed_order = "canonical";
    bool json() const { return format == "json"; }
};

void emit(const Options& opt, const fr::Json& j, const std::string& text) {
    if (opt.json()) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

int cmd_check(const Options& opt, const std::string& file) {
    const auto r = load_ring(file);
    std::vector<fr::CheckReport> reports{fr::check_axioms(r)};
    reports.front().subject = "axioms of " + r.name();
    fr::CheckReport skipped{"stabilizer rule (skipped elements)", {}, {}};
    for (fr::Index x = 0; x < r.rank(); ++x) {
        try {
            reports.push_back(fr::check_stabilizer_rule(r, r.label(x)));
        } catch (const fr::UnknownProduct& e) {
            skipped.notes.push_back(r.label(x) + ": " + e.what());
        }
    }
    if (!skipped.notes.empty()) reports.push_back(skipped);

    bool fail = false;
    fr::Json arr = fr::Json::array();
    std::string text;
    for (const auto& rep : reports) {
        fail = fail || rep.any_fail();
        arr.push_back(fr::to_json(rep));
        text += fr::to_text(rep);
    }
    text += fail ? "result: FAIL\n" : "result: ok\n";
    emit(opt, {{"command", "check"}, {"ring", r.name()}, {"reports", arr}, {"fail", fail}}, text);
    return fail ? kViolation : kOk;
}

int cmd_verdict(const Options& opt, const std::string& file, std::size_t depth) {
    const auto r = load_ring(file);
    auto v = fr::theorem_verdict(r, depth);
    std::string check;
    if (const auto* c2 = std::get_if<fr::ConclusionII>(&v.outcome)) {
        auto bad = fr::verify_certificate(r, c2->certificate);
        check = bad ? "certificate check failed: " + *bad : "certificate re-verified independently";
        v.notes.push_back(check);
        if (bad) v.outcome = fr::VerdictObstruction{check, c2->certificate};
    }
    emit(opt, {{"command", "verdict"}, {"ring", r.name()}, {"verdict", fr::to_json(r, v)}}, fr::to_text(r, v));
    return v.is_obstruction() ? kViolation : kOk;
}

int cmd_ladder(const Options& opt, const std::string& file, const std::string& x3, std::size_t depth) {
    const auto r = load_ring(file);
    if (!r.find(x3)) throw InputError("--x3: unknown basis label '" + x3 + "'");
    fr::LadderCertificate cert;
    try {
        cert = fr::ladder_build(r, x3, depth);
    } catch (const fr::PreconditionUnmet& e) {
        throw InputError(std::string("--x3: ") + e.what());
    }
    auto bad = fr::verify_certificate(r, cert);
    bool violation = bad.has_value();
    if (const auto* f = std::get_if<fr::FailureBranch>(&cert.terminal))
        violation = violation || f->branch != fr::LadderBranch::GrouplikeOrder2;

    fr::Json j{{"command", "ladder"}, {"ring", r.name()}, {"certificate", fr::to_json(r, cert)}, {"verified", !bad}};
    if (bad) j["verification_error"] = *bad;
    std::string text = fr::to_text(r, cert);
    text += bad ? "certificate check failed: " + *bad + "\n" : "certificate re-verified independently\n";
    emit(opt, j, text);
    return violation ? kViolation : kOk;
}

int cmd_subrings(const Options& opt, const std::string& file) {
    const auto r = load_ring(file);
    fr::SubringEnumerationOptions so;
    so.allow_incomplete = !r.is_complete();
    const auto subs = fr::enumerate_standard_subrings(r, so);
    const auto viol = fr::freeness_obstructions(r, subs);

    fr::Json js = fr::Json::array(), jv = fr::Json::array();
    std::ostringstream text;
    text << "standard subrings of " << r.name() << (r.is_complete() ? "" : " (closures needing Unknown products omitted)")
         << ":\n";
    for (const auto& s : subs) {
        js.push_back(fr::to_json(r, s));
        text << "  " << fr::to_text(r, s) << '\n';
    }
    for (const auto& v : viol) {
        jv.push_back(fr::to_json(r, v));
        text << fr::to_text(r, v) << '\n';
    }
    text << (viol.empty() ? "no divisibility violations\n" : "");
    emit(opt, {{"command", "subrings"}, {"ring", r.name()}, {"complete", r.is_complete()}, {"subrings", js}, {"violations", jv}},
         text.str());
    return viol.empty() ? kOk : kViolation;
}

std::vector<fr::Coeff> parse_degrees(const std::string& s) {
    std::vector<fr::Coeff> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("--degrees: expected comma-separated positive integers, got '" + s + "'");
        try {
            out.push_back(std::stoll(item));
        } catch (const std::out_of_range&) {
            throw InputError("--degrees: value out of range '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("--degrees: empty list");
    return out;
}

int cmd_search(const Options& opt, const std::string& degrees, fr::Coeff max_mult, const std::string& out_dir) {
    fr::RingSearchOptions so;
    so.max_mult = max_mult;
    std::vector<fr::FusionRing> rings;
    try {
        rings = fr::enumerate_rings(parse_degrees(degrees), so);
    } catch (const fr::RankTooLarge& e) {
        throw InputError(std::string("--degrees: ") + e.what());
    } catch (const fr::InvalidArgument& e) {
        throw InputError(std::string("--degrees: ") + e.what());
    }
    fr::Json arr = fr::Json::array();
    std::string text;
    for (const auto& r : rings) {
        const std::string spec = fr::write_spec(r);
        fr::Json entry{{"name", r.name()}, {"spec", spec}};
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            const auto path = std::filesystem::path(out_dir) / (r.name() + ".ring");
            std::ofstream(path, std::ios::binary) << spec;
            entry["path"] = path.string();
            text += path.string() + "\n";
        } else {
            text += spec + "\n";
        }
        arr.push_back(entry);
    }
    text += "# " + std::to_string(rings.size()) + " ring(s)\n";
    emit(opt, {{"command", "search"}, {"degrees", degrees}, {"max_mult", max_mult}, {"rings", arr}}, text);
    return kOk;
}

int cmd_gen(const std::vector<std::string>& args) {
    auto arity = [&](std::size_t n) {
        if (args.size() != n) throw InputError("gen: '" + args[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
    };
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("gen: expected a positive integer, got '" + s + "'");
        return static_cast<fr::Coeff>(std::stoll(s));
    };
    if (args.empty()) throw InputError("gen: expected cyclic <n> | so3 <maxdeg> | fragment | chartable <file>");
    const std::string& kind = args[0];
    fr::FusionRing r = [&] {
        try {
            if (kind == "cyclic") {
                arity(2);
                return fr::cyclic_group_ring(number(args[1]));
            }
            if (kind == "so3") {
                arity(2);
                return fr::so3_truncated(number(args[1]));
            }
            if (kind == "fragment") {
                arity(1);
                return fr::proof_fragment_ring();
            }
            if (kind == "chartable") {
                arity(2);
                return fr::char_table_ring(fr::parse_character_table(read_input(args[1])));
            }
        } catch (const fr::Error& e) {
            throw InputError("gen " + kind + ": " + e.what());
        }
        throw InputError("gen: unknown generator '" + kind + "'");
    }();
    std::cout << fr::write_spec(r);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion ring checker: axioms, subrings, degree-3 ladder and ring search"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed-order", opt.seed_order, "Iteration order (reserved; only canonical)")
        ->check(CLI::IsMember({"canonical"}));

    std::string file, x3, degrees, out_dir;
    std::size_t depth = 1000;
    fr::Coeff max_mult = 2;
    std::vector<std::string> gen_args;

    auto* check = app.add_subcommand("check", "Check axioms and the stabilizer rule");
    check->add_option("file", file, "Ring spec ('-' for stdin)")->required();
    auto* verdict = app.add_subcommand("verdict", "Run the degree-3 analysis to a verdict");
    verdict->add_option("file", file, "Ring spec ('-' for stdin)")->required();
    verdict->add_option("--depth", depth, "Ladder depth bound");
    auto* ladder = app.add_subcommand("ladder", "Build the ladder certificate from x3");
    ladder->add_option("file", file, "Ring spec ('-' for stdin)")->required();
    ladder->add_option("--x3", x3, "Self-dual degree-3 label")->required();
    ladder->add_option("--depth", depth, "Ladder depth bound");
    auto* subrings = app.add_subcommand("subrings", "Standard subrings and divisibility violations");
    subrings->add_option("file", file, "Ring spec ('-' for stdin)")->required();
    auto* search = app.add_subcommand("search", "Enumerate fusion rings with given degrees");
    search->add_option("--degrees", degrees, "Comma-separated odd degrees, e.g. 1,1,1,3")->required();
    search->add_option("--max-mult", max_mult, "Largest structure constant")->check(CLI::NonNegativeNumber);
    search->add_option("--out-dir", out_dir, "Write each ring to <dir>/<name>.ring");
    auto* gen = app.add_subcommand("gen", "Write a reference ring spec to stdout");
    gen->add_option("what", gen_args, "cyclic <n> | so3 <maxdeg> | fragment | chartable <file>")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "fusionring: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*check) return cmd_check(opt, file);
        if (*verdict) return cmd_verdict(opt, file, depth);
        if (*ladder) return cmd_ladder(opt, file, x3, depth);
        if (*subrings) return cmd_subrings(opt, file);
        if (*search) return cmd_search(opt, degrees, max_mult, out_dir);
        if (*gen) return cmd_gen(gen_args);
    } catch (const InputError& e) {
        std::cerr << "fusionring: " << e.what() << '\n';
        return kInputError;
    } catch (const fr::Error& e) {
        std::cerr << "fusionring: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
