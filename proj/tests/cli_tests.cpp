#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + BNK_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("crt certificate output") {
    RunResult r = run_cli("crt 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x: 5\nm: 0\nodd_part: 5\ny: 3\nz: 1\nb: 3\na: 8\n");

    r = run_cli("crt 361513152");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("b: 200526827\n") != std::string::npos);
    CHECK(r.out.find("a: 667378345\n") != std::string::npos);

    CHECK(run_cli("crt 0").exit_code == 2);
    CHECK(run_cli("crt twelve").exit_code == 2);
}

TEST_CASE("member finds the least witness") {
    TempFile f("cli_member_in.txt", "2\n");
    RunResult r = run_cli("member cli_member_in.txt --domain Z --bound 0");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "0\n");

    TempFile one("cli_member_one.txt", "1\n");
    r = run_cli("member cli_member_one.txt --domain Z --bound 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("evidence, not proof") != std::string::npos);

    // out-of-domain entries are input errors
    TempFile neg("cli_member_neg.txt", "-2\n");
    CHECK(run_cli("member cli_member_neg.txt --domain N --bound 2").exit_code == 2);
    CHECK(run_cli("member cli_member_in.txt --domain Q --bound 2").exit_code == 2);
}

TEST_CASE("extract output forms") {
    TempFile f("cli_extract_in.txt", "2 1  # pair\n");
    RunResult r = run_cli("extract cli_extract_in.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "U 2\nA 2 2 1\nM 1 2 1\nM 2 2 2\n");

    // products skip the final index, so only the additive triple remains
    r = run_cli("extract cli_extract_in.txt --paper-style");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "the triples [i,j,k] with i=<j and A[i]+A[j]=A[k]\n"
                   "[2, 2, 1]\n"
                   "the triples [i,j,k] with i=<j<2 and A[i]*A[j]=A[k]\n");

    CHECK(run_cli("extract no_such_file.txt").exit_code == 2);
    TempFile bad("cli_extract_bad.txt", "1 two 3\n");
    CHECK(run_cli("extract cli_extract_bad.txt").exit_code == 2);
}

TEST_CASE("satisfies") {
    TempFile t("cli_sat_tuple.txt", "2 1\n");
    TempFile rels("cli_sat_rels.txt", "U 2\nA 2 2 1\n");
    RunResult r = run_cli("satisfies cli_sat_tuple.txt cli_sat_rels.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "satisfied\n");

    TempFile y("cli_sat_tuple2.txt", "3 1\n");
    r = run_cli("satisfies cli_sat_tuple2.txt cli_sat_rels.txt");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "violated: A 2 2 1\n");

    TempFile badrels("cli_sat_rels_bad.txt", "U 7\n");
    CHECK(run_cli("satisfies cli_sat_tuple.txt cli_sat_rels_bad.txt").exit_code == 2);
}

TEST_CASE("emit-d") {
    TempFile f("cli_emit_in.txt", "2\n");
    RunResult r = run_cli("emit-d cli_emit_in.txt --format sexpr");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(^ (- (* a (- 2 y1)) (* (- (* 2 b) 1) (- (* 3 b) 1))) 2)\n");

    r = run_cli("emit-d cli_emit_in.txt --format smt2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(set-logic QF_NIA)\n") == 0);
    CHECK(r.out.find("(check-sat)\n") != std::string::npos);

    CHECK(run_cli("emit-d cli_emit_in.txt --format latex").exit_code == 2);
}

TEST_CASE("search-eq prints sorted triples") {
    RunResult r = run_cli("search-eq --name q1 --bound 200");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "132 143 164\n143 132 164\n");

    r = run_cli("search-eq --name q1 --bound 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());

    CHECK(run_cli("search-eq --name q9 --bound 10").exit_code == 2);
    CHECK(run_cli("search-eq --name sq1 --bound 1").exit_code == 2);
}

TEST_CASE("paper tuples and verification") {
    RunResult r = run_cli("paper --which t1 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[8, 12, 2]\n") != std::string::npos);
    CHECK(r.out.find("[16, 17, 18]\n") != std::string::npos);
    CHECK(r.out.find("verify: ok\n") != std::string::npos);
    // 7 additive + 9 multiplicative display triples, one per line
    size_t triples = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);)
        if (!line.empty() && line[0] == '[') ++triples;
    CHECK(triples == 16);

    r = run_cli("paper --which t2 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[13, 14, 6]\n") != std::string::npos);
    CHECK(r.out.find("verify: ok\n") != std::string::npos);

    r = run_cli("paper --which b13");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "164 165 27060 732243600 132 133 17556 308213136 143 144 20592 "
          "424030464 1\n");

    r = run_cli("paper --which b15 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify: ok") != std::string::npos);

    CHECK(run_cli("paper --which t9").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("member --domain Z --bound 1").exit_code == 2);
}

TEST_CASE("output is byte identical across thread counts") {
    RunResult a = run_cli("search-eq --name sq1 --bound 400 --threads 1");
    RunResult b = run_cli("search-eq --name sq1 --bound 400 --threads 8");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);

    TempFile f("cli_member_thr.txt", "3 2\n");
    RunResult c = run_cli("member cli_member_thr.txt --domain Z --bound 2 --threads 1");
    RunResult d = run_cli("member cli_member_thr.txt --domain Z --bound 2 --threads 8");
    CHECK(c.out == d.out);
    CHECK(c.out == "0 0\n");
    CHECK(c.exit_code == 1);
    CHECK(d.exit_code == 1);
}
