#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "awnev/parser.hpp"
#include "awnev/report.hpp"

using namespace awnev;

namespace {

const AwContext kCtx{Rat(1, 2)};

}  // namespace

TEST_CASE("xpoly json round trip") {
    XPoly p = parse_xpoly("x^2 - 3*x + 1/2");
    CHECK(report::xpoly_to_json(p) == R"(["1/2","-3","1"])");
    CHECK(report::xpoly_from_json(report::xpoly_to_json(p)) == p);
    CHECK(report::xpoly_from_json("[]").is_zero());
    CHECK_THROWS_AS(report::xpoly_from_json("{"), DomainError);
}

TEST_CASE("mpoly and hypersurface json round trip") {
    MPoly q(2);
    q.add_term({2, 0}, Rat(1));
    q.add_term({1, 1}, Rat(-7, 2));
    q.add_term({0, 2}, Rat(3));
    CHECK(report::mpoly_from_json(report::mpoly_to_json(q)) == q);

    MPoly l1(2), l2(2);
    l1.add_term({1, 0}, Rat(1));
    l1.add_term({0, 1}, Rat(-1));
    l2.add_term({1, 0}, Rat(2));
    l2.add_term({0, 1}, Rat(1));
    Hypersurface D(l1 * l2, {{l1, 1}, {l2, 1}});
    Hypersurface back = report::hypersurface_from_json(report::hypersurface_to_json(D));
    CHECK(back.poly == D.poly);
    CHECK(back.degree == D.degree);
    REQUIRE(back.factors.size() == 2);
    CHECK(back.factors[0].first == l1);
}

TEST_CASE("fmt report round trip") {
    FmtReport rep;
    rep.rows = {{10.0, 0.25, 1.5, 2.0, 0.0625}, {100.0, 0.5, 3.0, 4.0, 0.03125}};
    Config cfg;
    RGrid grid({10.0, 100.0}, 2048);
    std::string json_text = report::fmt_to_json(rep, cfg, grid);
    FmtReport back = report::fmt_from_json(json_text);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].r == rep.rows[i].r);
        CHECK(back.rows[i].m == rep.rows[i].m);
        CHECK(back.rows[i].N == rep.rows[i].N);
        CHECK(back.rows[i].T == rep.rows[i].T);
        CHECK(back.rows[i].deviation == rep.rows[i].deviation);
    }
    CHECK(report::fmt_to_csv(rep).substr(0, 20) == "r,m,N,T,deviation\n10");
}

TEST_CASE("margin report round trip keeps notes") {
    smt::MarginReport rep;
    rep.theorem = "truncated/aw";
    rep.notes = {"substituted"};
    rep.rows = {{100.0, 1.0, 2.0, 1.0, 0.25}};
    Config cfg;
    RGrid grid({100.0}, 256);
    smt::MarginReport back = report::margin_from_json(report::margin_to_json(rep, cfg, grid));
    CHECK(back.theorem == rep.theorem);
    CHECK(back.notes == rep.notes);
    REQUIRE(back.rows.size() == 1);
    CHECK(back.rows[0].margin_over_T == rep.rows[0].margin_over_T);
}

TEST_CASE("decomposition report round trip") {
    decomp::DegreeMultiset ds({6, 5, 5, 5, 5, 5, 3, 2, 2, 1});
    auto [dec, trace] = decomp::greedy_decompose(ds, 3);
    auto [dec2, trace2] = report::decomposition_from_json(
        report::decomposition_to_json(dec, trace));
    CHECK(dec2.bins == dec.bins);
    CHECK(dec2.bin_degrees == dec.bin_degrees);
    REQUIRE(trace2.rows.size() == trace.rows.size());
    CHECK(trace2.rows[0].k == trace.rows[0].k);
    CHECK(trace2.rows.back().i_min == trace.rows.back().i_min);
}

TEST_CASE("config file parsing") {
    const char* path = "awnev_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment\n"
            << "s = 1/3\n"
            << "theta_points = 256\n"
            << "slack = 0.1\n"
            << "format = csv\n";
    }
    Config cfg = config_from_file(path);
    CHECK(cfg.s == Rat(1, 3));
    CHECK(cfg.theta_points == 256);
    CHECK(cfg.slack == 0.1);
    CHECK(cfg.format == OutputFormat::csv);
    {
        std::ofstream out(path);
        out << "mystery = 1\n";
    }
    CHECK_THROWS_AS(config_from_file(path), DomainError);
    {
        std::ofstream out(path);
        out << "s = 3/2\n";
    }
    CHECK_THROWS_AS(config_from_file(path), DomainError);
    std::remove(path);
}

TEST_CASE("config validation bounds") {
    Config cfg;
    cfg.theta_points = 32;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = Config{};
    cfg.slack = 1.5;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    CHECK_NOTHROW(Config{}.validate());
}
