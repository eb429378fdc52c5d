#include "sturmian/report.hpp"

#include "sturmian/error.hpp"
#include "sturmian/parallel.hpp"
#include "sturmian/returns.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace sturmian::report {

namespace {

using nlohmann::ordered_json;

constexpr int kApproxDigits = 12;

std::string big(const BigInt& v) { return v.str(); }

std::string join(const std::vector<FiniteWord>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w.str();
    }
    return out;
}

ordered_json words_json(const std::vector<FiniteWord>& words) {
    ordered_json out = ordered_json::array();
    for (const auto& w : words) out.push_back(w.str());
    return out;
}

bool is_witness(const IndexValue& v, std::uint64_t R) { return v.repetition_length + 1 == R; }

}  // namespace

std::vector<RecurrenceRow> recurrence_table(const LanguageView& view, std::size_t n_max, std::size_t jobs) {
    view.require_depth(n_max, "recurrence table");
    std::vector<RecurrenceRow> rows(n_max);
    parallel_for(n_max, jobs, [&](std::size_t i) {
        const std::size_t n = i + 1;
        RecurrenceValue value = recurrence_brute(view, n);
        RecurrenceRow& row = rows[i];
        row.n = n;
        row.R_brute = value.R;
        row.witness = value.witness;
        if (view.slope()) {
            row.R_closed = recurrence_closed(*view.slope(), n);
            row.match = *row.R_closed == value.R;
        }
    });
    return rows;
}

void write_recurrence(std::ostream& out, const std::vector<RecurrenceRow>& rows, Format format) {
    if (format == Format::Csv) {
        out << "n,R_brute,R_closed,witness,match\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.R_brute << ',' << (r.R_closed ? big(*r.R_closed) : "") << ',' << r.witness.str()
                << ',' << (r.match ? "true" : "false") << '\n';
        }
        return;
    }
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["R_brute"] = r.R_brute;
        row["R_closed"] = r.R_closed ? ordered_json(big(*r.R_closed)) : ordered_json(nullptr);
        row["witness"] = r.witness.str();
        row["match"] = r.match;
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

std::vector<IndexRow> index_table(const LanguageView& view, std::size_t n_max, std::size_t jobs) {
    std::vector<WitnessRow> witness_rows = equality_witnesses(view, 1, n_max, jobs);
    std::vector<IndexRow> rows;
    rows.reserve(witness_rows.size());
    for (auto& w : witness_rows) {
        IndexRow row;
        row.n = w.n;
        row.C = w.C;
        row.R = w.R;
        row.max_index = std::move(w.max_index);
        if (!w.witnesses.empty()) row.witness = std::move(w.witnesses.front());
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_index(std::ostream& out, const std::vector<IndexRow>& rows, Format format, bool approx) {
    if (format == Format::Csv) {
        out << "n,C,R,max_index,max_index_factor,witness,witness_index,equality";
        if (approx) out << ",max_index_approx";
        out << '\n';
        for (const auto& r : rows) {
            out << r.n << ',' << r.C << ',' << r.R << ',' << r.max_index.display() << ',' << r.max_index.w.str()
                << ',' << (r.witness ? r.witness->w.str() : "") << ','
                << (r.witness ? r.witness->display() : "") << ',' << (r.witness ? "true" : "false");
            if (approx) out << ',' << r.max_index.ind.to_decimal(kApproxDigits);
            out << '\n';
        }
        return;
    }
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["C"] = r.C;
        row["R"] = r.R;
        row["max_index"] = r.max_index.display();
        row["max_index_reduced"] = r.max_index.ind.to_string();
        row["max_index_factor"] = r.max_index.w.str();
        row["witness"] = r.witness ? ordered_json(r.witness->w.str()) : ordered_json(nullptr);
        row["witness_index"] = r.witness ? ordered_json(r.witness->display()) : ordered_json(nullptr);
        row["equality"] = r.witness.has_value();
        if (approx) row["max_index_approx"] = r.max_index.ind.to_decimal(kApproxDigits);
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

std::vector<AnalyzeRow> analyze_table(const LanguageView& view, std::size_t n_max, std::size_t jobs) {
    view.require_depth(n_max + 1, "analyze");
    std::vector<AnalyzeRow> rows(n_max);
    parallel_for(n_max, jobs, [&](std::size_t i) {
        rows[i].n = i + 1;
        rows[i].C = complexity(view, i + 1);
        rows[i].special = special_factors(view, i + 1);
    });
    return rows;
}

void write_analyze(std::ostream& out, const std::vector<AnalyzeRow>& rows, Format format) {
    if (format == Format::Csv) {
        out << "n,C,left_special,right_special,bispecial\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.C << ',' << join(r.special.left) << ',' << join(r.special.right) << ','
                << join(r.special.bispecial) << '\n';
        }
        return;
    }
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["C"] = r.C;
        row["left_special"] = words_json(r.special.left);
        row["right_special"] = words_json(r.special.right);
        row["bispecial"] = words_json(r.special.bispecial);
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

std::size_t VerifyResult::witnesses_from(std::size_t n_lo) const {
    std::size_t total = 0;
    for (const auto& r : rows) {
        if (r.n >= n_lo) total += r.witness_count;
    }
    return total;
}

std::string VerifyResult::verdict_line() const {
    if (!verdict.aperiodic) {
        for (std::size_t i = 0; i < verdict.complexities.size(); ++i) {
            if (verdict.complexities[i] <= i + 1) {
                return "not aperiodic: C(" + std::to_string(i + 1) + ")=" + std::to_string(verdict.complexities[i]);
            }
        }
    }
    if (!verdict.sturmian) {
        return "not Sturmian: C(" + std::to_string(*verdict.first_failure) +
               ")=" + std::to_string(verdict.complexity_at_failure);
    }
    return "Sturmian";
}

VerifyResult run_verify(const LanguageView& view, std::size_t n_max, std::size_t jobs) {
    view.require_depth(n_max, "verify");
    VerifyResult result;
    result.subject = view.label();
    result.verdict = is_sturmian_view(view, n_max);
    const bool periodic = view.period().has_value();

    result.rows.resize(n_max);
    parallel_for(n_max, jobs, [&](std::size_t i) {
        const std::size_t n = i + 1;
        VerifyRow& row = result.rows[i];
        row.n = n;
        row.C = result.verdict.complexities[i];
        RecurrenceValue rv = recurrence_brute(view, n);
        row.R_brute = rv.R;
        if (view.slope()) {
            row.R_closed = recurrence_closed(*view.slope(), n);
            row.match = *row.R_closed == rv.R;
        }
        if (periodic) return;
        std::vector<IndexValue> values = indices_at_length(view, n);
        bool first = true;
        for (auto& v : values) {
            const auto lhs = static_cast<std::int64_t>(rv.R);
            const auto rhs = static_cast<std::int64_t>(v.repetition_length + row.C) - static_cast<std::int64_t>(n);
            const std::int64_t slack = lhs - rhs;
            if (first || slack < row.min_slack) row.min_slack = slack;
            first = false;
            if (slack < 0) row.inequality_ok = false;
            if (is_witness(v, rv.R)) {
                if (!row.witness) row.witness = v;
                ++row.witness_count;
            }
            if (!row.max_index || v.ind > row.max_index->ind) row.max_index = v;
        }
    });

    if (view.slope()) {
        const Convergents conv = convergents(*view.slope(), convergent_index_for(*view.slope(), n_max) + 1);
        for (std::size_t N = 1; N <= conv.size(); ++N) {
            const BigInt& q = conv.q(static_cast<long>(N));
            if (q > n_max) break;
            const auto len = static_cast<std::size_t>(to_u64(q));
            if (result.expected_witness_lengths.empty() || result.expected_witness_lengths.back() != len) {
                result.expected_witness_lengths.push_back(len);
            }
        }
        if (!result.verdict.sturmian) {
            result.failures.push_back("characteristic word fails C(n)=n+1: " + result.verdict_line());
        }
    }
    for (const auto& r : result.rows) {
        if (!r.match) {
            result.failures.push_back("R(" + std::to_string(r.n) + ") brute " + std::to_string(r.R_brute) +
                                      " != closed form " + big(*r.R_closed));
        }
        if (!r.inequality_ok) {
            result.failures.push_back("R(" + std::to_string(r.n) + ") below n ind(w) + C(n) - n (slack " +
                                      std::to_string(r.min_slack) + ")");
        }
    }
    for (std::size_t len : result.expected_witness_lengths) {
        if (result.rows[len - 1].witness_count == 0) {
            result.missing_witness_lengths.push_back(len);
            result.failures.push_back("no factor with R(n) = n ind(w) + 1 at n = " + std::to_string(len));
        }
    }
    return result;
}

void write_verify(std::ostream& out, const VerifyResult& result, Format format, bool approx) {
    if (format == Format::Csv) {
        out << "# " << result.subject << ": " << result.verdict_line() << '\n';
        out << "n,C,R_brute,R_closed,match,max_index,max_index_factor,witness,witness_index,witnesses,"
               "min_slack,inequality_ok";
        if (approx) out << ",max_index_approx";
        out << '\n';
        for (const auto& r : result.rows) {
            out << r.n << ',' << r.C << ',' << r.R_brute << ',' << (r.R_closed ? big(*r.R_closed) : "") << ','
                << (r.match ? "true" : "false") << ',' << (r.max_index ? r.max_index->display() : "") << ','
                << (r.max_index ? r.max_index->w.str() : "") << ',' << (r.witness ? r.witness->w.str() : "") << ','
                << (r.witness ? r.witness->display() : "") << ',' << r.witness_count << ','
                << (r.max_index ? std::to_string(r.min_slack) : "") << ','
                << (r.inequality_ok ? "true" : "false");
            if (approx) out << ',' << (r.max_index ? r.max_index->ind.to_decimal(kApproxDigits) : "");
            out << '\n';
        }
        for (const auto& f : result.failures) out << "# FAIL " << f << '\n';
        return;
    }
    ordered_json j;
    j["subject"] = result.subject;
    j["verdict"] = result.verdict_line();
    j["sturmian"] = result.verdict.sturmian;
    j["aperiodic"] = result.verdict.aperiodic;
    j["expected_witness_lengths"] = result.expected_witness_lengths;
    j["missing_witness_lengths"] = result.missing_witness_lengths;
    ordered_json rows = ordered_json::array();
    for (const auto& r : result.rows) {
        ordered_json row;
        row["n"] = r.n;
        row["C"] = r.C;
        row["R_brute"] = r.R_brute;
        row["R_closed"] = r.R_closed ? ordered_json(big(*r.R_closed)) : ordered_json(nullptr);
        row["match"] = r.match;
        row["max_index"] = r.max_index ? ordered_json(r.max_index->display()) : ordered_json(nullptr);
        row["max_index_factor"] = r.max_index ? ordered_json(r.max_index->w.str()) : ordered_json(nullptr);
        row["witness"] = r.witness ? ordered_json(r.witness->w.str()) : ordered_json(nullptr);
        row["witness_index"] = r.witness ? ordered_json(r.witness->display()) : ordered_json(nullptr);
        row["witnesses"] = r.witness_count;
        row["min_slack"] = r.max_index ? ordered_json(r.min_slack) : ordered_json(nullptr);
        row["inequality_ok"] = r.inequality_ok;
        if (approx) {
            row["max_index_approx"] =
                r.max_index ? ordered_json(r.max_index->ind.to_decimal(kApproxDigits)) : ordered_json(nullptr);
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["failures"] = result.failures;
    j["ok"] = result.ok();
    out << j.dump(2) << '\n';
}

void write_fasta(std::ostream& out, const std::string& header, const FiniteWord& word, std::size_t width) {
    out << '>' << header << '\n';
    std::string_view text = word.view();
    for (std::size_t i = 0; i < text.size(); i += width) out << text.substr(i, width) << '\n';
}

ConstructionCheck check_construction(const CFExpansion& cf, const ConstructionTrace& trace) {
    ConstructionCheck check;
    check.upper_bound = index_upper_bound(cf, trace.N);
    LanguageView view = sturmian_view(cf, trace.v_length());
    check.v_in_language = view.index().find(trace.v.view()).has_value();
    check.brute_index = index_of_factor(view, trace.w);
    check.bound_attained = check.brute_index.ind == check.upper_bound && check.brute_index.ind == trace.exponent;
    return check;
}

void write_construction(std::ostream& out, const CFExpansion& cf, const ConstructionTrace& trace,
                        const std::optional<ConstructionCheck>& check, std::size_t elide_above) {
    const Convergents conv = convergents(cf, trace.N);
    ordered_json j;
    j["slope"] = cf.to_string();
    j["N"] = trace.N;
    j["q_N"] = big(conv.q(static_cast<long>(trace.N)));
    j["q_N_minus_1"] = big(conv.q(static_cast<long>(trace.N) - 1));
    j["a_N_plus_1"] = big(cf.coefficient(trace.N + 1));
    j["w_length"] = trace.w_length();
    j["v_length"] = trace.v_length();
    j["index"] = std::to_string(trace.v_length()) + "/" + std::to_string(trace.w_length());
    j["index_reduced"] = trace.exponent.to_string();
    j["upper_bound"] = index_upper_bound(cf, trace.N).to_string();
    const bool elide = trace.v_length() > elide_above;
    j["w"] = elide ? ordered_json(nullptr) : ordered_json(trace.w.str());
    j["v"] = elide ? ordered_json(nullptr) : ordered_json(trace.v.str());
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json step;
        step["i"] = s.i;
        step["c"] = big(s.c);
        step["slope"] = s.slope.to_string();
        step["w_length"] = s.w.size();
        step["v_length"] = s.v.size();
        const bool elide_step = s.v.size() > elide_above;
        step["w"] = elide_step ? ordered_json(nullptr) : ordered_json(s.w.str());
        step["v"] = elide_step ? ordered_json(nullptr) : ordered_json(s.v.str());
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    if (check) {
        ordered_json c;
        c["v_in_language"] = check->v_in_language;
        c["brute_index"] = check->brute_index.display();
        c["brute_index_reduced"] = check->brute_index.ind.to_string();
        c["bound_attained"] = check->bound_attained;
        j["check"] = std::move(c);
    }
    out << j.dump(2) << '\n';
}

}  // namespace sturmian::report
