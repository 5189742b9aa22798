#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace equigrass {

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
    std::string note;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;
    Check& add(std::string name, bool pass, std::string expected = {}, std::string computed = {}, std::string note = {});
    // expected == computed
    Check& expect_eq(std::string name, const std::string& expected, const std::string& computed, std::string note = {});
    void append(const Report& o);

    std::string text() const;
    nlohmann::ordered_json json() const;
};

}  // namespace equigrass
