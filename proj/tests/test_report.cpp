#include "doctest.h"

#include "sturmian/kernels.hpp"
#include "sturmian/report.hpp"

#include "json.hpp"

#include <sstream>

using namespace sturmian;
using namespace sturmian::report;

TEST_CASE("verify on the Fibonacci slope") {
    LanguageView view = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 50);
    VerifyResult r = run_verify(view, 50, 2);
    CHECK(r.ok());
    CHECK(r.verdict_line() == "Sturmian");
    CHECK(r.expected_witness_lengths == std::vector<std::size_t>{1, 2, 3, 5, 8, 13, 21, 34});
    CHECK(r.missing_witness_lengths.empty());
    for (std::size_t n : r.expected_witness_lengths) CHECK(r.rows[n - 1].witness_count > 0);
    std::ostringstream csv;
    write_verify(csv, r, Format::Csv, false);
    CHECK(csv.str().find("\n1,2,3,3,true,2/1,A,A,2/1,1,") != std::string::npos);
    std::ostringstream js;
    write_verify(js, r, Format::Json, true);
    auto j = nlohmann::json::parse(js.str());
    CHECK(j["ok"] == true);
    CHECK(j["rows"].size() == 50);
    CHECK(j["rows"][33]["R_closed"] == "122");
}

TEST_CASE("verify on controls") {
    VerifyResult tm = run_verify(control_view("thue-morse", 30), 30, 2);
    CHECK(tm.verdict_line() == "not Sturmian: C(2)=4");
    CHECK(tm.witnesses_from(2) == 0);
    CHECK(tm.ok());
    VerifyResult per = run_verify(control_view("periodic:AB", 10), 10, 1);
    CHECK(per.verdict_line() == "not aperiodic: C(2)=2");
    CHECK_FALSE(per.rows[0].max_index.has_value());
}

TEST_CASE("recurrence and index tables") {
    LanguageView view = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 5);
    std::ostringstream out;
    write_recurrence(out, recurrence_table(view, 3, 1), Format::Csv);
    CHECK(out.str() == "n,R_brute,R_closed,witness,match\n1,3,3,B,true\n2,6,6,AA,true\n3,10,10,BAB,true\n");
    std::ostringstream idx;
    write_index(idx, index_table(view, 2, 1), Format::Csv, false);
    CHECK(idx.str() ==
          "n,C,R,max_index,max_index_factor,witness,witness_index,equality\n"
          "1,2,3,2/1,A,A,2/1,true\n"
          "2,3,6,5/2,AB,AB,5/2,true\n");
}

TEST_CASE("FASTA wrapping") {
    std::ostringstream out;
    write_fasta(out, "x", FiniteWord(std::string(170, 'A')), 80);
    CHECK(out.str() == ">x\n" + std::string(80, 'A') + "\n" + std::string(80, 'A') + "\n" + std::string(10, 'A') + "\n");
}

TEST_CASE("construction report") {
    CFExpansion fib = CFExpansion::parse("[0;1,(1)]");
    ConstructionTrace t = construct_max_index_factor(fib, 8);
    ConstructionCheck check = check_construction(fib, t);
    CHECK(check.v_in_language);
    CHECK(check.bound_attained);
    CHECK(check.brute_index.display() == "121/34");
    std::ostringstream out;
    write_construction(out, fib, t, check, 1000);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["index"] == "121/34");
    CHECK(j["q_N"] == "34");
    CHECK(j["steps"].size() == 8);
}

TEST_CASE("reports do not depend on the scan backend") {
    const kernels::Backend original = kernels::active_backend();
    auto render = [] {
        std::ostringstream out;
        LanguageView view = sturmian_view(CFExpansion::parse("[0;1,2,(3,1)]"), 120);
        write_verify(out, run_verify(view, 120, 1), Format::Csv, false);
        return out.str();
    };
    kernels::set_backend(kernels::Backend::Scalar);
    const std::string scalar = render();
    if (kernels::backend_supported(kernels::Backend::Avx2)) {
        kernels::set_backend(kernels::Backend::Avx2);
        CHECK(render() == scalar);
    }
    kernels::set_backend(original);
}
