#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

// Commands run from the fixture directory so reports carry relative paths.
Run run(const std::vector<std::string>& args) {
    const auto cwd = fs::current_path();
    fs::current_path(DELTASYS_TEST_DATA);
    std::ostringstream out, err;
    const int code = deltasys::cli::run(args, out, err);
    fs::current_path(cwd);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (const char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ' ' && !quoted) {
            if (!cur.empty()) {
                out.push_back(cur);
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        out.push_back(cur);
    }
    return out;
}

struct Case {
    const char* golden;
    const char* command;
    int code;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.command; }

const Case cases[] = {
    {"lo_classify_w", "lo classify w", 0},
    {"lo_classify_w_plus_1", "lo classify \"w + 1\"", 1},
    {"lo_rank_omega_squared", "lo rank \"sum(w, w)\"", 0},
    {"lo_rank_eta", "lo rank eta", 1},
    {"lo_prefix_w_w", "lo prefix \"w + w\" --max-size 4", 0},
    {"sunflower_find", "sunflower find -i family.json --min-size 3", 0},
    {"sunflower_find_short", "sunflower find -i family_small.json --min-size 3", 1},
    {"sunflower_extract", "sunflower extract -i family_pairs9.json --size 3", 0},
    {"sunflower_extract_below", "sunflower extract -i family_small.json --size 3", 3},
    {"structured_find", "structured find -i path_labeling.json --target path3.json", 0},
    {"structured_find_absent", "structured find -i path_labeling.json --target K3", 1},
    {"age_check_graphs", "age check --age graphs --max-size 3", 0},
    {"age_check_triangle_free", "age check -i triangle_free.json --property dap3 --max-size 3", 1},
    {"age_witness_edge", "age witness --age graphs --target K2 --colors 2", 0},
    {"age_witness_none", "age witness --age graphs --target K3 --colors 2 --max-size 4", 3},
    {"age_bootstrap_chains", "age bootstrap --age linear_orders --target C2 --colors 3", 0},
    {"age_amalgam", "age amalgam --age graphs --left edge_ab.json --right nonedge_bc.json", 0},
    {"age_amalgam_none", "age amalgam -i cliques_le2.json --left edge_ab.json --right edge_ac.json", 1},
    {"sfp_build_pair", "sfp build --age graphs --target K2 --arity 2", 0},
    {"sfp_build_unavailable", "sfp build --age graphs --target K3 --arity 2 --max-size 8", 3},
    {"sfp_verify_k2", "sfp verify --witness edge_ab.json --target edge_ab.json --arity 2 --mode exact", 0},
    {"sfp_verify_refuted", "sfp verify --witness K4 --target K3 --arity 2", 1},
    {"sfp_verify_random", "sfp verify --witness E6 --target E3 --arity 2 --mode random --trials 100 --seed 4", 3},
    {"sfp_verify_refused", "sfp verify --witness E9 --target E3 --arity 2 --ceiling 10", 3},
    {"sfp_attack_found", "sfp attack --witness K3 --target K3 --arity 2 --trials 20 --seed 1", 1},
    {"sfp_attack_none", "sfp attack --witness K5 --target K2 --arity 2 --trials 20", 3},
    {"encode_partition", "encode partition -i path_coloring.json", 0},
    {"encode_split", "encode split -i path3.json --subset a,c", 0},
    {"encode_blocks", "encode blocks -i blocks.json", 0},
    {"encode_blocks_term", "encode blocks --term \"w + w\" --max-size 4", 0},
    {"suite_list", "suite list", 0},
};

} // namespace

class CliGolden : public ::testing::TestWithParam<Case> {};

TEST_P(CliGolden, ByteIdenticalAndExitCode) {
    const auto& c = GetParam();
    const auto first = run(split(c.command));
    const auto second = run(split(c.command));
    EXPECT_EQ(first.code, c.code) << c.command << "\n" << first.err;
    EXPECT_EQ(first.out, second.out);
    const fs::path golden = fs::path(DELTASYS_GOLDEN) / (std::string(c.golden) + ".json");
    if (std::getenv("DELTASYS_UPDATE_GOLDEN")) {
        std::ofstream(golden) << first.out;
        return;
    }
    std::ifstream in(golden);
    ASSERT_TRUE(in) << "missing golden file " << golden;
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(first.out, want.str()) << c.command;
}

INSTANTIATE_TEST_SUITE_P(Commands, CliGolden, ::testing::ValuesIn(cases),
                         [](const ::testing::TestParamInfo<Case>& info) { return std::string(info.param.golden); });

TEST(CliErrors, UsageErrorsExitTwo) {
    for (const char* cmd : {"", "frobnicate", "lo", "lo classify", "sfp verify --target K3", "suite run nope",
                            "lo classify 5", "lo classify \"w +\"", "age check --age nonsense",
                            "sunflower find -i missing.json", "sunflower find -i unknown_field.json",
                            "structured find -i path_labeling.json --target bad_arity.json",
                            "age check --age graphs --property colour"}) {
        const auto r = run(split(cmd));
        EXPECT_EQ(r.code, 2) << cmd;
        EXPECT_FALSE(r.err.empty()) << cmd;
        EXPECT_TRUE(r.out.empty()) << cmd;
    }
}

TEST(CliErrors, SchemaErrorsCarryJsonPointer) {
    EXPECT_NE(run(split("sunflower find -i unknown_field.json")).err.find("/colour"), std::string::npos);
    const auto r = run(split("structured find -i path_labeling.json --target bad_arity.json"));
    EXPECT_NE(r.err.find("/tables/E/0"), std::string::npos);
    EXPECT_NE(r.err.find("arity 3, expected 2"), std::string::npos);
}

TEST(CliText, HumanReadable) {
    const auto r = run(split("lo classify w --text"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: sunflowerable"), std::string::npos);
    EXPECT_NE(r.out.find("reason: is_omega"), std::string::npos);
}

TEST(CliEnv, CeilingOverride) {
    ::setenv("DELTASYS_CEILING", "5", 1);
    const auto r = run(split("sfp verify --witness K4 --target K3 --arity 2"));
    ::unsetenv("DELTASYS_CEILING");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("refused"), std::string::npos);
}

TEST(CliHelp, PrintsUsage) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sfp"), std::string::npos);
}
