#pragma once

#include "delta/qnumbers.hpp"

#include <functional>
#include <string>
#include <vector>

namespace delta {

enum class CheckStatus { Theorem, Conjecture };
enum class Profile { Quick, Full };

std::string status_name(CheckStatus s);
std::string profile_name(Profile p);
Profile parse_profile(const std::string& s);  // throws std::invalid_argument

struct CheckConfig {
    Profile profile = Profile::Quick;
    int n_max = 0;  // > 0 replaces every size cap of the profile
    int k = -1;     // >= 0 restricts checks that range over k
    int vars = 0;   // x-variables for full truncations; 0 means N = n
    QtZero qt_zero = QtZero::Zero;
    std::function<void(const std::string&)> progress;
};

struct CheckCase {
    std::string params;  // "n=4;k=2"
    bool pass = true;
    std::string expected, actual;  // filled on mismatch
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Theorem;
    std::string statement;
    std::vector<CheckCase> cases;
    double seconds = 0;  // never written into reports
    bool passed() const;
};

// Size caps: op bounds anything that applies Macdonald eigenoperators,
// comb bounds pure enumeration.
struct Caps {
    int op = 0, comb = 0;
};

struct CheckInfo {
    std::string name;
    CheckStatus status;
    std::string statement;
    Caps quick, full;
    std::function<void(class CheckRun&)> body;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& name);

// throws std::invalid_argument for an unknown name
CheckResult run_check(const std::string& name, const CheckConfig& cfg);

struct Report {
    std::vector<CheckResult> checks;  // sorted by name
    bool theorem_failure() const;
    int conjecture_mismatches() const;
};

// checks run one after another; the Macdonald cache is shared state
Report run_suite(const std::vector<std::string>& names, const CheckConfig& cfg);
std::vector<std::string> all_check_names();

std::string report_text(const Report& r);
// one key=value per line
std::string report_structured(const Report& r);

// Handle passed to check bodies.
class CheckRun {
public:
    CheckRun(const CheckConfig& cfg, Caps caps, std::vector<CheckCase>& out, std::string name);
    int op_cap() const { return caps_.op; }
    int comb_cap() const { return caps_.comb; }
    const CheckConfig& config() const { return cfg_; }
    // k values in [lo, hi] allowed by the --k filter
    std::vector<int> ks(int lo, int hi) const;
    int vars(int n) const { return cfg_.vars > 0 ? cfg_.vars : n; }
    void expect(const std::string& params, bool ok, const std::string& expected = "", const std::string& actual = "");
    template <class T>
    void equal(const std::string& params, const T& want, const T& got) {
        if (want == got)
            expect(params, true);
        else
            expect(params, false, want.to_string(), got.to_string());
    }
    void progress(const std::string& msg) const;

private:
    const CheckConfig& cfg_;
    Caps caps_;
    std::vector<CheckCase>& out_;
    std::string name_;
};

}  // namespace delta
