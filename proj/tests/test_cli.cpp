#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("NAKIT_BIN");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("vector classify") {
    auto r = run("vector classify 1,0,0,0,1,1");
    CHECK(r.code == 0);
    CHECK(r.out.find("dim F_v: 2") != std::string::npos);
    CHECK(r.out.find("contains v_Lad: yes") != std::string::npos);
    CHECK(r.out.find("type: II") != std::string::npos);
}

TEST_CASE("vector rank and aliases") {
    CHECK(run("vector rank vlad").out.find("dim F_v: 1") != std::string::npos);
    CHECK(run("vector rank wa").out.find("dim F_v: 4") != std::string::npos);
    auto r = run("vector contains --target v3pa vlad");
    CHECK(r.code == 1);
    CHECK(r.out.find("contains v_3Pa: no") != std::string::npos);
}

TEST_CASE("check identities on corpus entries") {
    auto r = run("check --identity anti_associative corpus:aa3-2");
    CHECK(r.code == 0);
    CHECK(r.out.find("anti_associative: pass") != std::string::npos);
    CHECK(run("check --identity anti-associative corpus:aa3-2").code == 0);  // hyphen form
    auto r2 = run("check --identity commutative corpus:aa3-2");
    CHECK(r2.code == 1);
    auto r3 = run("check --identity no_such corpus:aa3-2");
    CHECK(r3.code == 2);
}

TEST_CASE("check identities on files, with parse diagnostics") {
    std::string good = write_temp("good.alg", "dim 1\nmul e1 e1 -> 1 e1\n");
    CHECK(run("check --identity associative " + good).code == 0);
    std::string bad = write_temp("bad.alg", "dim 3\nmul e1 e4 -> 1 e1\n");
    auto r = run("check --identity associative " + bad);
    CHECK(r.code == 2);
    CHECK(r.out.find("line 2") != std::string::npos);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("polarize output parses back") {
    auto r = run("polarize corpus:aa3-2");
    CHECK(r.code == 0);
    CHECK(r.out.find("# rho") != std::string::npos);
    CHECK(r.out.find("# psi") != std::string::npos);
}

TEST_CASE("cocycles") {
    auto r = run("cocycles --flavor v:vlad corpus:jj2");
    CHECK(r.code == 0);
    CHECK(r.out.find("dimension: 8") != std::string::npos);
    auto r2 = run("cocycles --flavor 'lr:g4;id' corpus:jj2");
    CHECK(r2.code == 0);
    auto r3 = run("cocycles --flavor nope corpus:jj2");
    CHECK(r3.code == 2);
}

TEST_CASE("deform verify") {
    std::string def = write_temp("def.alg",
                                 "order 0\ndim 1\nmul e1 e1 -> 1 e1\n"
                                 "order 1\ndim 1\nmul e1 e1 -> 1 e1\n"
                                 "order 2\ndim 1\nmul e1 e1 -> 1 e1\n");
    auto r = run("deform verify --flavor plain --through-order 2 " + def);
    CHECK(r.code == 0);
    CHECK(r.out.find("verified: yes") != std::string::npos);
    std::string bad = write_temp("bad_def.alg",
                                 "order 0\ndim 2\nmul e1 e1 -> 1 e1\nmul e1 e2 -> 1 e2\n"
                                 "mul e2 e1 -> 1 e2\n"
                                 "order 1\ndim 2\nmul e1 e2 -> 1 e1\n");
    auto r2 = run("deform verify --flavor v:id --through-order 1 " + bad);
    CHECK(r2.code == 1);
    CHECK(r2.out.find("nonzero, first at") != std::string::npos);
    // anti-associative pair (Id, -Id) on the skew corpus algebra
    std::string aa = write_temp("aa_def.alg",
                                "order 0\ndim 3\nmul e1 e2 -> 1 e3\nmul e2 e1 -> -1 e3\n"
                                "order 1\ndim 3\nmul e1 e1 -> 1 e2\n"
                                "order 2\ndim 3\n");
    auto r3 = run("deform verify --flavor 'vw:id;-1,0,0,0,0,0' --through-order 2 " + aa);
    CHECK(r3.code == 0);
    CHECK(r3.out.find("order 2: zero") != std::string::npos);
    std::remove(def.c_str());
    std::remove(bad.c_str());
    std::remove(aa.c_str());
}

TEST_CASE("free") {
    auto r = run("free --preset jacobi-jordan --gens 2 --max-deg 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("2, 3, 2, 1, 0") != std::string::npos);
    auto r2 = run("free --preset aas --gens 2 --max-deg 3 --with-unit");
    CHECK(r2.out.find("1, 2, 1, 0") != std::string::npos);
    auto r3 = run("free --preset jacobi-jordan --multilinear 4");
    CHECK(r3.out.find("5") != std::string::npos);
    std::string pres = write_temp("pres.txt",
                                  "gens 2\nsymmetry comm\nrel 1 RR id + 1 RR c + 1 RR c2\n");
    auto r4 = run("free --file " + pres + " --max-deg 5");
    CHECK(r4.code == 0);
    CHECK(r4.out.find("2, 3, 2, 1, 0") != std::string::npos);
    std::remove(pres.c_str());
}

TEST_CASE("series") {
    auto r = run("series inverse -- -1,1/2,-1/3,5/24");
    CHECK(r.code == 0);
    CHECK(r.out.find("-1,1/2,-1/6") != std::string::npos);
    auto r2 = run("series koszul -- -1,1/2,-1/3,5/24 -1,1/2,-1/2,0");
    CHECK(r2.code == 1);
    CHECK(r2.out.find("order 3") != std::string::npos);
    CHECK(r2.out.find("-1/6 vs -1/2") != std::string::npos);
    auto r3 = run("series compose -- 0,1,0,0 1,1,0,0");
    CHECK(r3.out.find("0,1,2,1") != std::string::npos);
}

TEST_CASE("corpus list and show") {
    auto r = run("corpus list");
    CHECK(r.code == 0);
    CHECK(r.out.find("octonions") != std::string::npos);
    auto r2 = run("corpus show aa3-2");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("mul e1 e1 -> 1 e2") != std::string::npos);
    CHECK(run("corpus show nope").code == 2);
}

TEST_CASE("survey") {
    auto r = run("survey");
    CHECK(r.code == 0);
    CHECK(r.out.find("survey: all rows agree") != std::string::npos);
    CHECK(r.out.find("anti-associative") != std::string::npos);
    // determinism
    auto r2 = run("survey");
    CHECK(r.out == r2.out);
}

TEST_CASE("tsv output and float-free reports") {
    auto r = run("--format tsv vector classify 1,0,0,0,1,1");
    CHECK(r.out.find("dim F_v\t2") != std::string::npos);
    for (const std::string& cmd :
         {std::string("vector classify 1/3,0,0,0,1,1"), std::string("corpus show p33"),
          std::string("series inverse -- -1,1/3")}) {
        auto rr = run(cmd);
        CHECK(rr.out.find('.') == std::string::npos);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("vector rank not-a-vector").code == 2);
    CHECK(run("series inverse -- 0,1").code == 2);  // c1 = 0 rejected
    CHECK(run("deform verify --flavor plain missing_file.alg").code == 2);
}
