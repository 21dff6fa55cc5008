#pragma once

#include <string>
#include <vector>

namespace gkm {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

// Ordered list of named checks; prints as "CHECK <name>: PASS|FAIL <witness>".
class Report {
public:
    void add(std::string name, bool pass, std::string witness = {});
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    const std::vector<Check>& checks() const { return checks_; }
    const Check* first_failure() const;
    const Check* find(const std::string& name) const;
    std::string str() const;

private:
    std::vector<Check> checks_;
};

struct Verdict {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

}  // namespace gkm
