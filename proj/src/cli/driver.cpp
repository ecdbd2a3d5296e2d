#include "teq/cli/driver.hpp"

#include <CLI/CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "teq/core/erase.hpp"
#include "teq/frontend/parser.hpp"
#include "teq/frontend/printer.hpp"
#include "teq/typecheck/typecheck.hpp"
#include "teq/wprime/translate.hpp"
#include "teq/wproof/check.hpp"

namespace teq::cli {

namespace {

using frontend::print;

struct RunConfig {
    std::size_t fuel = eval::kDefaultFuel;
    std::string effect = "!";
    std::vector<std::string> inputs;
    std::string output;
};

struct InputError {
    std::string what;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError{path + ": cannot open"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

frontend::SourceFile load_program(const std::string& file) {
    std::string text = slurp(file);
    try {
        return frontend::parse_program(text);
    } catch (const frontend::ParseError& e) {
        throw InputError{file + ":" + e.what()};
    }
}

std::vector<frontend::ProofBlock> load_script(const std::string& file) {
    std::string text = slurp(file);
    try {
        return frontend::parse_proof_script(text);
    } catch (const frontend::ParseError& e) {
        throw InputError{file + ":" + e.what()};
    }
}

std::string where(const std::string& file, frontend::Position p) {
    return file + ":" + std::to_string(p.line) + ":" + std::to_string(p.column);
}

void report(std::ostream& err, const std::string& loc, const std::string& name,
            const check::Diagnostic& d) {
    err << loc << ": " << name << ": " << d.rule;
    if (d.premise > 0) err << " premise " << d.premise;
    if (!d.path.empty()) err << " at " << d.path;
    err << ": " << d.message << "\n";
    if (d.expected) err << "  expected: " << print(*d.expected) << "\n";
    if (d.actual) err << "  actual:   " << print(*d.actual) << "\n";
}

Effect effect_of(const std::string& s) { return s == "?" ? Effect::General : Effect::Total; }

// Typechecks one directive: context well-formedness, then inference, then
// the stated type if any.
std::optional<AType> check_directive(const frontend::SourceFile& src, const frontend::Directive& d,
                                     Effect theta, const RunConfig& cfg, const std::string& file,
                                     std::ostream& err) {
    check::CheckConfig cc{cfg.fuel};
    std::string loc = where(file, d.pos);
    if (auto wf = check::wf_context(d.context, cc); !wf) {
        report(err, loc, d.name, wf.error());
        return std::nullopt;
    }
    const frontend::Definition* def = src.find(d.name);
    auto r = check::infer(d.context, def->body, theta, cc);
    if (!r) {
        report(err, loc, d.name, r.error());
        return std::nullopt;
    }
    if (d.type && !(*d.type == *r)) {
        check::Diagnostic diag{"check", 0, "", "inferred type differs from the stated type",
                               *d.type, *r};
        report(err, loc, d.name, diag);
        return std::nullopt;
    }
    return *r;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = kOk;
    for (const auto& file : cfg.inputs) {
        frontend::SourceFile src = load_program(file);
        for (const auto& d : src.directives) {
            if (d.kind != frontend::DirectiveKind::Check) continue;
            Effect theta = d.effect.value_or(effect_of(cfg.effect));
            auto ty = check_directive(src, d, theta, cfg, file, err);
            if (!ty) {
                status = kRejected;
                continue;
            }
            // A stated type is alpha-equal to the inferred one; print it with its own binder names.
            out << print(d.type.value_or(*ty)) << "\n";
        }
    }
    return status;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    for (const auto& file : cfg.inputs) {
        frontend::SourceFile src = load_program(file);
        for (const auto& d : src.directives) {
            if (d.kind != frontend::DirectiveKind::Eval) continue;
            Term t = erase_term(src.find(d.name)->body);
            eval::Trace tr = eval::reduce_trace(t, cfg.fuel);
            out << print(tr.last()) << "\n";
            out << "steps: " << tr.steps() << (tr.fuel_exhausted ? " (fuel exhausted)" : "")
                << "\n";
        }
    }
    return kOk;
}

int cmd_erase(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    for (const auto& file : cfg.inputs) {
        frontend::SourceFile src = load_program(file);
        for (const auto& d : src.definitions)
            out << d.name << " = " << print(erase_term(d.body)) << "\n";
    }
    return kOk;
}

std::string obl_path(const std::string& input) {
    auto dot = input.rfind('.');
    auto slash = input.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return input + ".obl";
    return input.substr(0, dot) + ".obl";
}

int cmd_translate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.output.empty() && cfg.output != "-" && cfg.inputs.size() > 1)
        throw InputError{"-o takes a single input file"};
    int status = kOk;
    for (const auto& file : cfg.inputs) {
        frontend::SourceFile src = load_program(file);
        std::ostringstream obl;
        for (const auto& d : src.directives) {
            if (d.kind != frontend::DirectiveKind::Obligation) continue;
            Effect theta = d.effect.value_or(effect_of(cfg.effect));
            auto ty = check_directive(src, d, theta, cfg, file, err);
            if (!ty) {
                status = kRejected;
                continue;
            }
            wprime::Sequent s = wprime::make_obligation(
                d.context, erase_term(src.find(d.name)->body), erase_type(*ty), theta);
            obl << "-- obligation " << d.name << "\n" << print(s) << "\n";
        }
        std::string target = cfg.output.empty() ? obl_path(file) : cfg.output;
        if (target == "-") {
            out << obl.str();
        } else {
            std::ofstream o(target, std::ios::binary);
            if (!o) throw InputError{target + ": cannot write"};
            o << obl.str();
            out << "wrote " << target << "\n";
        }
    }
    return status;
}

int cmd_wp_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = kOk;
    wproof::ProofConfig pc{cfg.fuel};
    for (const auto& file : cfg.inputs) {
        auto blocks = load_script(file);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            auto r = wproof::check_proof(b.sequent, b.proof, pc);
            std::string loc = where(file, b.pos);
            if (r) {
                out << loc << ": ok: " << print(b.sequent.goal()) << "\n";
                continue;
            }
            status = kRejected;
            const auto& f = r.error();
            err << loc << ": " << f.rule << " at " << f.position << ": " << f.message << "\n";
            if (f.expected) err << "  expected: " << print(*f.expected) << "\n";
            if (f.actual) err << "  actual:   " << print(*f.actual) << "\n";
        }
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"teqt: checker, evaluator and translator for annotated Teq programs", "teqt"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto fuel = [&](CLI::App* sc) {
        sc->add_option("--fuel", cfg.fuel, "step bound for join, eval and opsem")
            ->check(CLI::NonNegativeNumber);
    };
    auto files = [&](CLI::App* sc, const char* what) {
        sc->add_option("files", cfg.inputs, what)->required();
    };

    CLI::App* check = app.add_subcommand("check", "typecheck every check directive");
    files(check, "program files (.teqt)");
    check->add_option("--effect", cfg.effect, "default effect for directives without 'at'")
        ->check(CLI::IsMember({"!", "?"}));
    fuel(check);

    CLI::App* ev = app.add_subcommand("eval", "erase and reduce every eval directive");
    files(ev, "program files (.teqt)");
    fuel(ev);

    CLI::App* er = app.add_subcommand("erase", "print the erasure of every definition");
    files(er, "program files (.teqt)");

    CLI::App* tr = app.add_subcommand("translate", "emit soundness obligations to .obl");
    files(tr, "program files (.teqt)");
    tr->add_option("-o,--output", cfg.output, "output file, '-' for stdout");
    tr->add_option("--effect", cfg.effect, "default effect for directives without 'at'")
        ->check(CLI::IsMember({"!", "?"}));
    fuel(tr);

    CLI::App* wp = app.add_subcommand("wp-check", "check proof scripts");
    files(wp, "proof scripts (.wp)");
    fuel(wp);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (ev->parsed()) return cmd_eval(cfg, out, err);
        if (er->parsed()) return cmd_erase(cfg, out, err);
        if (tr->parsed()) return cmd_translate(cfg, out, err);
        return cmd_wp_check(cfg, out, err);
    } catch (const InputError& e) {
        err << e.what << "\n";
        return kParseError;
    }
}

}  // namespace teq::cli
