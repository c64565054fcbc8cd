#pragma once

// Command-line front end. `run` is the whole program; tools/main.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 domain error (not a solution, invalid
// dissection, failed verification), 2 usage or input error.

#include "dissection.hpp"
#include "io.hpp"
#include "render.hpp"
#include "solvers.hpp"
#include "verify.hpp"
#include "words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace sl2comb::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

inline std::string matrix_line(const Matrix& m) {
    const auto name = recognize(m);
    return m.to_string() + (name ? " = " + *name : "");
}

inline std::string epsilon(Sign s) { return "ε=" + std::string(s == Sign::plus ? "+1" : "-1"); }

inline Json trace_json(const RewriteTrace& trace) {
    Json out = Json::array();
    for (const auto& step : trace)
        out.push_back(Json{{"rule", to_string(step.rule)}, {"position", step.position}, {"sign", to_int(step.sign)}});
    return out;
}

inline Dissection dissect(const Word& w, const EquationTarget& target, std::ostream& err) {
    switch (target.name()) {
        case TargetName::Id: return dissection_from_id_solution(w);
        case TargetName::S: return echancree_from_s_solution(w);
        case TargetName::T: {
            Solution::verified(w, target);
            if (w.at(w.size()) >= 2) return coiffee_from_t_solution(w);
            const Word prefix(std::vector<Entry>(w.begin(), w.end() - 1));
            err << "note: last entry is 1; writing the echancree dissection of " << prefix << '\n';
            return echancree_from_s_solution(prefix);
        }
        case TargetName::custom: break;
    }
    throw UsageError("dissect supports the targets Id, S and T");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solve M(a_n)...M(a_1) = ±M in SL(2,Z) and draw the matching polygon dissections", "sl2comb"};
    app.require_subcommand(1, 1);

    std::string format = "table";
    std::string word_text, target_text, matrix_text, seed_text, file, output;
    std::size_t n = 0, max_n = 0;
    Entry bound = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output style")->check(CLI::IsMember({"table", "json"}));
    };
    auto add_target = [&](CLI::App* sub) {
        sub->add_option("--target", target_text, "Id, S, T or custom:a,b;c,d")->required();
    };

    auto* eval = app.add_subcommand("eval", "Evaluate M(a_n)...M(a_1)");
    eval->add_option("word", word_text, "Comma-separated integers")->required();
    add_format(eval);

    auto* check = app.add_subcommand("check", "Test whether a word solves M_n(a) = ±target");
    check->add_option("word", word_text)->required();
    add_target(check);
    add_format(check);

    auto* solve = app.add_subcommand("solve", "List every solution of length n with entries in [1, bound]");
    add_target(solve);
    solve->add_option("--n", n, "Word length")->required()->check(CLI::Range(1, 32));
    auto* bound_opt = solve->add_option("--bound", bound, "Largest entry searched (default: n)")->check(CLI::PositiveNumber);
    add_format(solve);

    auto* generate = app.add_subcommand("generate", "Close a seed solution under operations (a) and (b)");
    generate->add_option("--seed", seed_text, "A solution to start from")->required();
    add_target(generate);
    generate->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 16));
    add_format(generate);

    auto* reduce = app.add_subcommand("reduce", "Collapse interior 0 and 1 entries, tracking the sign");
    reduce->add_option("word", word_text)->required();
    add_format(reduce);

    auto* minimal = app.add_subcommand("minimal", "Shortest positive word for a matrix, up to sign");
    minimal->add_option("--matrix", matrix_text, "a,b;c,d")->required();
    add_format(minimal);

    auto* dissect = app.add_subcommand("dissect", "Build the dissection whose quiddity is a solution");
    dissect->add_option("word", word_text)->required();
    add_target(dissect);
    dissect->add_option("-o,--output", output, "Write the dissection file here instead of stdout");

    auto* quiddity = app.add_subcommand("quiddity", "Read the quiddity of a dissection file");
    quiddity->add_option("file", file)->required();
    add_format(quiddity);

    auto* validate_cmd = app.add_subcommand("validate", "Check a dissection file");
    validate_cmd->add_option("file", file)->required();
    add_format(validate_cmd);

    std::string render_format;
    auto* render_cmd = app.add_subcommand("render", "Draw a dissection file");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--format", render_format)->required()->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("-o,--output", output, "Write the drawing here instead of stdout");

    std::size_t verify_max_n = 6;
    auto* verify = app.add_subcommand("verify", "Run the consistency suite for small n");
    verify->add_option("--max-n", verify_max_n, "Largest word length checked")->check(CLI::Range(5, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    const bool json = format == "json";
    try {
        if (eval->parsed()) {
            const Word w = parse_word(word_text);
            const Matrix m = eval_word(w);
            if (json) {
                const auto name = recognize(m);
                out << serialize(Json{{"word", to_json(w)},
                                      {"matrix", m.to_string()},
                                      {"name", name ? Json(*name) : Json(nullptr)}});
            } else {
                out << detail::matrix_line(m) << '\n';
            }
            return ok;
        }

        if (check->parsed()) {
            const Word w = parse_word(word_text);
            const auto target = parse_target(target_text);
            const auto sign = check_equation(w, target);
            if (json)
                out << serialize(Json{{"word", to_json(w)},
                                      {"target", target.to_string()},
                                      {"solution", sign.has_value()},
                                      {"sign", sign ? Json(to_int(*sign)) : Json(nullptr)}});
            else if (sign)
                out << w.to_string() << " solves E_" << target.to_string() << ' ' << detail::epsilon(*sign) << '\n';
            else
                out << w.to_string() << " does not solve E_" << target.to_string() << '\n';
            return sign ? ok : domain_error;
        }

        if (solve->parsed()) {
            const auto target = parse_target(target_text);
            if (bound_opt->count() == 0) bound = static_cast<Entry>(n);
            const auto set = enumerate_solutions(n, target, bound);
            err << "note: complete for entries in [1, " << bound << "]\n";
            if (json) {
                out << serialize(to_json(set));
            } else {
                for (const auto& s : set.solutions) out << s.word().to_string() << ' ' << detail::epsilon(s.sign()) << '\n';
            }
            return ok;
        }

        if (generate->parsed()) {
            const auto target = parse_target(target_text);
            const auto seed = Solution::verified(parse_word(seed_text), target);
            const auto set = generate_closure(seed, max_n, target);
            if (json) {
                out << serialize(to_json(set));
            } else {
                for (const auto& s : set.solutions)
                    out << s.word().to_string() << ' ' << detail::epsilon(s.sign()) << " op-b=" << *s.op_b_count << '\n';
            }
            return ok;
        }

        if (reduce->parsed()) {
            const Word w = parse_word(word_text);
            const auto r = reduce_word(w);
            if (json) {
                out << serialize(Json{{"input", to_json(w)},
                                      {"word", to_json(r.word)},
                                      {"sign", to_int(r.sign)},
                                      {"trace", detail::trace_json(r.trace)}});
            } else {
                out << r.word.to_string() << " sign=" << to_string(r.sign) << '\n';
                for (const auto& step : r.trace)
                    out << "  " << to_string(step.rule) << " at " << step.position << " sign=" << to_string(step.sign)
                        << '\n';
            }
            return ok;
        }

        if (minimal->parsed()) {
            const Matrix m = parse_matrix(matrix_text);
            const auto p = minimal_presentation(m);
            if (json)
                out << serialize(Json{{"matrix", m.to_string()}, {"word", to_json(p.word)}, {"sign", to_int(p.sign)}});
            else
                out << (p.word.empty() ? "(empty)" : p.word.to_string()) << " sign=" << to_string(p.sign) << '\n';
            return ok;
        }

        if (dissect->parsed()) {
            const Word w = parse_word(word_text);
            require_positive(w, "dissect");
            const auto d = detail::dissect(w, parse_target(target_text), err);
            detail::write_output(output, serialize(d), out);
            return ok;
        }

        if (quiddity->parsed()) {
            const auto d = parse_dissection(detail::read_file(file));
            const auto s = solution_from_dissection(d);
            if (json)
                out << serialize(Json{{"kind", to_string(d.kind())},
                                      {"word", to_json(s.word)},
                                      {"target", s.target.to_string()},
                                      {"sign", to_int(s.sign)}});
            else
                out << s.word.to_string() << " E_" << s.target.to_string() << ' ' << detail::epsilon(s.sign) << '\n';
            return ok;
        }

        if (validate_cmd->parsed()) {
            const auto d = parse_dissection(detail::read_file(file));
            const auto violations = validate(d);
            if (json) {
                Json list = Json::array();
                for (const auto& v : violations) list.push_back(Json{{"code", v.code}, {"detail", v.detail}});
                out << serialize(Json{{"kind", to_string(d.kind())}, {"valid", violations.empty()}, {"violations", list}});
            } else if (violations.empty()) {
                out << "valid " << to_string(d.kind()) << " dissection\n";
            } else {
                for (const auto& v : violations) out << "invalid: [" << v.code << "] " << v.detail << '\n';
            }
            return violations.empty() ? ok : domain_error;
        }

        if (render_cmd->parsed()) {
            const auto d = parse_dissection(detail::read_file(file));
            detail::write_output(output, render(d, parse_render_format(render_format)), out);
            return ok;
        }

        if (verify->parsed()) {
            VerifyOptions opt;
            opt.max_n = verify_max_n;
            bool all = true;
            for (const auto& r : run_verification(opt)) {
                out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
                if (!r.passed) out << ": " << r.detail;
                out << '\n';
                all = all && r.passed;
            }
            return all ? ok : domain_error;
        }
    } catch (const NotASolution& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const InvalidDissection& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }
    return usage_error;
}

}  // namespace sl2comb::cli
