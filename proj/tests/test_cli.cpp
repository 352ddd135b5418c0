#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using nlohmann::json;
using namespace cmunits;

namespace
{

struct Outcome
{
    int status;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit statuses")
{
    CHECK(cli::exit_status(ErrorCode::NotInUpperHalfPlane) == 10);
    CHECK(cli::exit_status(ErrorCode::RoundingFailure) == 21);
    CHECK(run({}).status == cli::exit_usage);
    CHECK(run({"eval"}).status == cli::exit_usage);
    CHECK(run({"frobnicate"}).status == cli::exit_usage);
}

TEST_CASE("eval")
{
    Outcome j = run({"eval", "j", "--tau", "i"});
    CHECK(j.status == 0);
    json r = j.report();
    CHECK(r["command"] == "eval");
    CHECK(r["status"] == "ok");
    CHECK(r["precision"]["working_bits"] == 216);
    std::string re = r["outputs"]["value"]["re"];
    bool leading = re.rfind("1.72799999", 0) == 0 || re.rfind("1.728000000", 0) == 0;
    CHECK(leading);

    Outcome zero = run({"eval", "wp", "--v", "0/1", "--tau", "i"});
    CHECK(zero.status == cli::exit_status(ErrorCode::ZeroVector));
    CHECK(zero.report()["error"]["code"] == "ZeroVector");
    CHECK_FALSE(zero.err.empty());

    Outcome low = run({"eval", "eta", "--tau", "1-i"});
    CHECK(low.status == cli::exit_status(ErrorCode::NotInUpperHalfPlane));

    Outcome s = run({"eval", "siegel", "--v", "1/2,3/4", "--disc", "-40"});
    CHECK(s.status == 0);
}

TEST_CASE("invariants")
{
    Outcome excluded = run({"invariant", "quotient", "--disc", "-3", "-N", "4"});
    CHECK(excluded.status == cli::exit_status(ErrorCode::ExcludedField));

    Outcome q = run({"invariant", "quotient", "--disc", "-40", "-N", "4"});
    CHECK(q.status == 0);
    json r = q.report();
    CHECK(r["warnings"].empty());
    std::string re = r["outputs"]["value"]["re"];
    CHECK(re.rfind("7.18188486", 0) == 0);

    Outcome weak = run({"invariant", "quotient", "--disc", "-20", "-N", "4"});
    CHECK(weak.status == 0);
    CHECK_FALSE(weak.report()["warnings"].empty());
}

TEST_CASE("minimal polynomials")
{
    Outcome q = run({"minpoly", "--disc", "-40", "-N", "4"});
    REQUIRE(q.status == 0);
    json r = q.report();
    CHECK(r["outputs"]["polynomial"]["display"] == "X^8 - 72*X^7 + 12*X^6 + 72*X^5 + 38*X^4 + 72*X^3 + 12*X^2 - 72*X + 1");
    CHECK(r["outputs"]["unit"] == true);
    CHECK(r["outputs"]["orbit_size"] == 8);

    Outcome coarse = run({"--prec-bits", "64", "minpoly", "--disc", "-40", "-N", "4", "--expr", "siegel12N"});
    CHECK(coarse.status == cli::exit_status(ErrorCode::RoundingFailure));
    CHECK(coarse.report()["error"]["hint"] == "increase --prec-bits");

    Outcome hk = run({"minpoly", "--disc", "-40", "-N", "4", "--over", "HK"});
    CHECK(hk.status == 0);
    CHECK(hk.report()["outputs"]["integral"] == false);
}

TEST_CASE("reports are reproducible")
{
    std::vector<std::string> args{"invariant", "siegel12N", "--disc", "-23", "-N", "3"};
    Outcome a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.report().contains("timing_ms"));

    std::vector<std::string> timed{"--timing", "eval", "eta", "--tau", "i"};
    CHECK(run(timed).report().contains("timing_ms"));
}

TEST_CASE("verification suites")
{
    CHECK(run({"verify", "bounds", "--disc", "-40,-84", "-N", "4"}).status == 0);
    CHECK(run({"verify", "dN", "--disc", "-23", "-N", "2,3"}).status == 0);
    CHECK(run({"verify", "axioms", "-N", "3,4", "--count", "3"}).status == 0);
}
