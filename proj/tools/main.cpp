#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polycert/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for real-rooted polynomials"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string coeffs, checks;
    auto* certify = app.add_subcommand("certify", "classify the roots of an exact-coefficient polynomial");
    certify->add_option("coefficients", coeffs, "comma-separated rationals, constant term first")->required();
    certify->add_option("--checks", checks, "M positivity screens, \"m2,m1;m2,m1;...\"");
    certify->callback([&] {
        action = [&] {
            const polycert::CertifyRequest req{coeffs, polycert::parse_checks(checks)};
            return polycert::run_certify(req, std::cout);
        };
    });

    int r = 1, s = 1;
    bool entry_json = false;
    auto* entry = app.add_subcommand("entry", "print entry (r, s) of E(n) in the e-basis");
    entry->add_option("r", r, "row index, 1-based")->required();
    entry->add_option("s", s, "column index, 1-based")->required();
    entry->add_flag("--json", entry_json, "wrap the rendering in a JSON object");
    entry->callback([&] { action = [&] { return polycert::run_entry(r, s, entry_json, std::cout); }; });

    polycert::VerifyOptions vo;
    int vk = 0, vn = 0;
    auto* verify = app.add_subcommand("verify", "run identity verification suites, one JSON line per check");
    verify->add_option("suite,--suite", vo.suite,
                       "schur|vandermonde|eminor|equivalence|main|hypergeom|forests|cancellation|all");
    verify->add_option("--k", vk, "cap the suite's k range");
    verify->add_option("--n", vn, "cap the suite's n range");
    verify->callback([&] {
        action = [&] {
            if (verify->count("--k") > 0) vo.k_max = vk;
            if (verify->count("--n") > 0) vo.n_max = vn;
            return polycert::run_verify(vo, std::cout);
        };
    });

    int ck = 5;
    std::string table = "btriangle";
    auto* count = app.add_subcommand("count", "print the B(k, h) triangle with enumerated class sizes");
    count->add_option("table", table, "table name")->check(CLI::IsMember({"btriangle"}));
    count->add_option("--k", ck, "largest k row (<= 8; enumeration columns stop at 5)");
    count->callback([&] { action = [&] { return polycert::run_count(ck, std::cout); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
}
