#include "sturmian/error.hpp"
#include "sturmian/kernels.hpp"
#include "sturmian/language.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/report.hpp"
#include "sturmian/returns.hpp"
#include "sturmian/wordgen.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <thread>

using namespace sturmian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string slope;
    std::string control;
    std::string format = "csv";
    std::string output;
    std::size_t jobs = 0;
    bool approx = false;
    std::string backend = "auto";
};

struct Subject {
    std::optional<NormalizedSlope> slope;
    std::string control;
};

void add_subject_options(CLI::App* cmd, Common& common, bool allow_control = true) {
    auto* s = cmd->add_option("--slope", common.slope, "continued fraction such as \"[0;1,2,(3,1)]\"");
    if (allow_control) {
        auto* c = cmd->add_option("--control", common.control,
                                  "thue-morse, fibonacci-substitution or periodic:WORD");
        s->excludes(c);
    } else {
        s->required();
    }
}

void add_output_options(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", common.output, "write to this file instead of stdout");
    cmd->add_option("--jobs", common.jobs, "worker threads (default: hardware concurrency)");
    cmd->add_flag("--approx", common.approx, "add decimal columns next to exact rationals");
}

Subject resolve(const Common& common) {
    Subject s;
    if (!common.slope.empty()) {
        s.slope = normalize_slope(CFExpansion::parse(common.slope));
        if (s.slope->letters_swapped) {
            std::cerr << "note: slope normalized to " << s.slope->cf.to_string() << ", letters swapped\n";
        }
    } else if (!common.control.empty()) {
        s.control = common.control;
    } else {
        throw Error(ErrorKind::InvalidParameter, "one of --slope or --control is required");
    }
    return s;
}

LanguageView make_view(const Subject& s, std::size_t depth) {
    if (s.slope) return sturmian_view(s.slope->cf, depth);
    return control_view(s.control, depth);
}

report::Format format_of(const Common& c) { return c.format == "json" ? report::Format::Json : report::Format::Csv; }

std::size_t jobs_of(const Common& c) {
    if (c.jobs > 0) return c.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw Error(ErrorKind::InvalidParameter, "cannot open " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void apply_backend(const std::string& name) {
    if (name == "auto") return;
    kernels::set_backend(name == "avx2" ? kernels::Backend::Avx2 : kernels::Backend::Scalar);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sturmian word toolkit: certified prefixes, recurrence, indices and constructions"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--backend", common.backend, "scan kernels: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    std::size_t length = 0;
    auto* generate = app.add_subcommand("generate", "write a prefix as FASTA");
    add_subject_options(generate, common);
    generate->add_option("--length", length, "prefix length")->required()->check(CLI::PositiveNumber);
    generate->add_option("--output", common.output, "write to this file instead of stdout");

    std::size_t n_max = 0;
    std::size_t rauzy = 0;
    auto* analyze = app.add_subcommand("analyze", "complexity and special factors, or a Rauzy graph in DOT");
    add_subject_options(analyze, common);
    add_output_options(analyze, common);
    analyze->add_option("--n-max", n_max, "largest factor length")->check(CLI::PositiveNumber);
    analyze->add_option("--rauzy", rauzy, "print the Rauzy graph of order N as DOT")->check(CLI::PositiveNumber);

    std::string factor;
    auto* returns = app.add_subcommand("returns", "recurrence function table, or return words of one factor");
    add_subject_options(returns, common);
    add_output_options(returns, common);
    returns->add_option("--n-max", n_max, "largest factor length")->check(CLI::PositiveNumber);
    returns->add_option("--factor", factor, "list the return words of this factor instead");

    auto* index = app.add_subcommand("index", "maximal index per length and equality witnesses");
    add_subject_options(index, common);
    add_output_options(index, common);
    index->add_option("--n-max", n_max, "largest factor length")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "brute force against closed forms and inequalities");
    add_subject_options(verify, common);
    add_output_options(verify, common);
    verify->add_option("--n-max", n_max, "largest factor length")->required()->check(CLI::PositiveNumber);

    std::size_t N = 0;
    bool check = false;
    std::size_t elide = 100000;
    auto* construct = app.add_subcommand("construct", "factor of maximal index with |w| = q_N, as JSON");
    add_subject_options(construct, common, false);
    construct->add_option("--N", N, "convergent index")->required();
    construct->add_option("--output", common.output, "write to this file instead of stdout");
    construct->add_flag("--check", check, "confirm v in a certified prefix and measure ind(w) by scanning");
    construct->add_option("--elide-above", elide, "omit words longer than this from the JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        apply_backend(common.backend);
        if (*generate) {
            Subject s = resolve(common);
            Sink sink(common.output);
            if (s.slope) {
                std::string header = "slope=" + common.slope + " L=" + std::to_string(length);
                if (s.slope->letters_swapped) {
                    header += " normalized=" + s.slope->cf.to_string() + " letters_swapped=true";
                }
                report::write_fasta(sink.out(), header, characteristic_prefix(s.slope->cf, length));
            } else {
                std::size_t depth = 1;
                LanguageView view = control_view(s.control, depth);
                while (view.prefix().size() < length) view = control_view(s.control, depth *= 2);
                FiniteWord word = view.prefix().substr(0, length);
                report::write_fasta(sink.out(), "control=" + s.control + " L=" + std::to_string(length), word);
            }
            return kExitOk;
        }
        if (*analyze) {
            Subject s = resolve(common);
            Sink sink(common.output);
            if (rauzy > 0) {
                LanguageView view = make_view(s, rauzy + 1);
                sink.out() << rauzy_graph(view, rauzy).to_dot();
                return kExitOk;
            }
            if (n_max == 0) throw Error(ErrorKind::InvalidParameter, "analyze needs --n-max or --rauzy");
            LanguageView view = make_view(s, n_max + 1);
            report::write_analyze(sink.out(), report::analyze_table(view, n_max, jobs_of(common)), format_of(common));
            return kExitOk;
        }
        if (*returns) {
            Subject s = resolve(common);
            Sink sink(common.output);
            if (!factor.empty()) {
                LanguageView view = make_view(s, factor.size());
                ReturnWordSet set = return_words(view, FiniteWord(factor));
                if (format_of(common) == report::Format::Json) {
                    nlohmann::ordered_json j;
                    j["factor"] = factor;
                    j["returns"] = nlohmann::ordered_json::array();
                    for (std::size_t i = 0; i < set.returns.size(); ++i) {
                        j["returns"].push_back({{"return_word", set.returns[i].str()},
                                                {"complete_return_word", set.complete_returns[i].str()}});
                    }
                    sink.out() << j.dump(2) << '\n';
                } else {
                    sink.out() << "factor,return_word,complete_return_word\n";
                    for (std::size_t i = 0; i < set.returns.size(); ++i) {
                        sink.out() << factor << ',' << set.returns[i].str() << ',' << set.complete_returns[i].str()
                                   << '\n';
                    }
                }
                return kExitOk;
            }
            if (n_max == 0) throw Error(ErrorKind::InvalidParameter, "returns needs --n-max or --factor");
            LanguageView view = make_view(s, n_max);
            auto rows = report::recurrence_table(view, n_max, jobs_of(common));
            report::write_recurrence(sink.out(), rows, format_of(common));
            for (const auto& r : rows) {
                if (!r.match) {
                    std::cerr << "mismatch at n=" << r.n << '\n';
                    return kExitMismatch;
                }
            }
            return kExitOk;
        }
        if (*index) {
            Subject s = resolve(common);
            Sink sink(common.output);
            LanguageView view = make_view(s, n_max);
            report::write_index(sink.out(), report::index_table(view, n_max, jobs_of(common)), format_of(common),
                                common.approx);
            return kExitOk;
        }
        if (*verify) {
            Subject s = resolve(common);
            Sink sink(common.output);
            LanguageView view = make_view(s, n_max);
            report::VerifyResult result = report::run_verify(view, n_max, jobs_of(common));
            report::write_verify(sink.out(), result, format_of(common), common.approx);
            std::cerr << result.subject << ": " << result.verdict_line() << '\n';
            if (!result.ok()) {
                std::cerr << "FAIL " << result.failures.front() << '\n';
                return kExitMismatch;
            }
            return kExitOk;
        }
        if (*construct) {
            Subject s = resolve(common);
            Sink sink(common.output);
            ConstructionTrace trace = construct_max_index_factor(s.slope->cf, N);
            std::optional<report::ConstructionCheck> checked;
            if (check) checked = report::check_construction(s.slope->cf, trace);
            report::write_construction(sink.out(), s.slope->cf, trace, checked, elide);
            if (checked && !(checked->v_in_language && checked->bound_attained)) {
                std::cerr << "construction check failed\n";
                return kExitMismatch;
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Mismatch ? kExitMismatch : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
