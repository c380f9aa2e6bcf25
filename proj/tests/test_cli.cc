#include <tclose/cli.hh>

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace tclose;
using std::string;
using std::vector;

namespace
{
    struct Run
    {
        int code;
        string out;
        string err;
    };

    auto run(const vector<string> & args, const string & input = "") -> Run
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return Run{code, out.str(), err.str()};
    }

    auto lines(const string & s) -> std::size_t
    {
        std::size_t count = 0;
        for (char c : s)
            count += c == '\n';
        return count;
    }
}

TEST_CASE("generate piped into enumerate")
{
    auto gen = run({"generate", "--model", "example1", "--n", "3", "--delta", "1"});
    REQUIRE(gen.code == exit_ok);
    CHECK(gen.out == "3 20\n0 1 8 20\n0 2 14 20\n1 2 17 20\n");

    auto en = run({"enumerate", "--delta", "1"}, gen.out);
    CHECK(en.code == exit_ok);
    CHECK(lines(en.out) == 7);
    CHECK(en.out.find("clique 19 20 0,1,2\n") != string::npos);

    auto oracle = run({"enumerate", "-", "--delta", "1", "--engine", "oracle"}, gen.out);
    CHECK(oracle.out == en.out);

    auto big = run({"enumerate", "--delta", "1", "--min-size", "2"}, gen.out);
    CHECK(lines(big.out) == 4);
}

TEST_CASE("exit codes")
{
    auto pre = run({"verify-bounds", "--delta", "0", "--d0", "0", "--d1", "1", "--d2", "0"});
    CHECK(pre.code == exit_precondition);
    CHECK(pre.out.empty());
    CHECK(! pre.err.empty());

    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"enumerate"}, "1 1\n").code == exit_usage);
    CHECK(run({"enumerate", "--delta", "1", "--kind", "blob"}, "1 1\n").code == exit_usage);

    auto parse = run({"enumerate", "--delta", "1"}, "x y\n");
    CHECK(parse.code == exit_parse);
    CHECK(parse.err.find("line 1") != string::npos);
    CHECK(run({"closure", "/nonexistent/file"}).code == exit_parse);
    CHECK(run({"closure", "--format", "native"}, "2 3\n0 1 0\n").code == exit_parse);

    CHECK(run({"generate", "--model", "example1", "--n", "21"}).code == exit_size_guard);
    CHECK(run({"generate", "--model", "moonmoser", "--n", "8", "--delta", "0"}).code == exit_ok);
    string wide = run({"generate", "--model", "moonmoser", "--n", "7", "--delta", "0"}).out;
    CHECK(run({"enumerate", "--delta", "0", "--engine", "oracle"}, wide).code == exit_size_guard);

    auto help = run({"--help"});
    CHECK(help.code == exit_ok);
    CHECK(help.out.find("enumerate") != string::npos);
}

TEST_CASE("parameter subcommands")
{
    string path = "3 3\n0 2 1 2 3\n1 2 1 2 3\n";
    CHECK(run({"closure"}, path).out == "c\n2\n");
    CHECK(run({"closure", "--weak"}, path).out == "# gamma=1\nposition,vertex,value\n1,2,0\n2,0,0\n3,1,0\n");
    CHECK(run({"instability", "--local"}, path).out == "local_eta\n0\n");
    CHECK(run({"instability", "--pairwise", "--d1", "1", "--restricted"}, path).out == "pairwise_eta\n0\n");
    CHECK(run({"instability", "--weak-pairwise", "--d1", "0"}, path).code == exit_ok);
    CHECK(run({"instability", "--combined", "--d0", "1", "--d1", "1", "--d2", "0"}, path).out.rfind("# b=", 0) == 0);
    CHECK(run({"instability"}, path).code == exit_usage);
    CHECK(run({"instability", "--local", "--pairwise"}, path).code == exit_usage);
    CHECK(run({"instability", "--pairwise", "--restricted", "--all-intervals"}, path).code == exit_usage);

    auto rate = run({"closure-rate", "--d1", "0"}, path);
    CHECK(rate.out == "x,support,rate\n0,9,0.666667\n1,3,0.000000\n");
    auto exact = run({"closure-rate", "--exact-x"}, path);
    CHECK(exact.out == "x,support,rate\n0,6,1.000000\n1,3,0.000000\n");
}

TEST_CASE("contact input keeps labels")
{
    string log = "0 ann bob\n0 bob cat\n0 ann cat\n";
    auto en = run({"enumerate", "--delta", "0", "--bin", "60"}, log);
    CHECK(en.code == exit_ok);
    CHECK(en.out == "clique 1 1 ann,bob,cat\n");

    auto weak = run({"closure", "--weak", "--format", "contacts"}, "5 b a\n5 c a\n");
    CHECK(weak.out == "# gamma=1\nposition,vertex,value\n1,a,0\n2,b,0\n3,c,0\n");
}

TEST_CASE("stats and verify-bounds")
{
    auto stats = run({"stats", "--bin", "1", "--config", "0,0,0"}, "1 a b\n1 b c\n2 a c\n3 c d\n");
    CHECK(stats.code == exit_ok);
    CHECK(stats.out ==
            "instance,vertices,edges,lifetime,degree_max,degree_min,static_c,static_gamma,"
            "c_d1=0_d0=0_d2=0,gamma_d1=0_d0=0_d2=0,local_eta,pairwise_eta_d1=0,"
            "weak_gamma_d1=0_d0=0_d2=0,weak_eta_d1=0_d0=0_d2=0,b_d1=0_d0=0_d2=0\n"
            "stdin,4,4,3,3,1,2,1,2,1,2,1,1,1,1\n");
    CHECK(run({"stats", "--config", "0,0"}, "1 a b\n").code == exit_usage);

    auto vb = run({"verify-bounds", "--delta", "1", "--k", "1"},
            run({"generate", "--model", "moonmoser", "--n", "2", "--delta", "1"}).out);
    CHECK(vb.code == exit_ok);
    CHECK(lines(vb.out) == 9);
    CHECK(vb.out.find("false") == string::npos);
}

TEST_CASE("output is deterministic")
{
    vector<string> args{"generate", "--model", "random-evolving", "--n", "9", "--lifetime", "12", "--seed", "5"};
    auto g = run(args).out;
    CHECK(g == run(args).out);
    auto s1 = run({"stats"}, g).out;
    CHECK(s1 == run({"stats"}, g).out);
    CHECK(run({"enumerate", "--delta", "2", "--kind", "plex", "--k", "1"}, g).out
            == run({"enumerate", "--delta", "2", "--kind", "plex", "--k", "1"}, g).out);
}
