#include "equigrass/report.hpp"

#include <algorithm>
#include <sstream>

namespace equigrass {

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
}

Check& Report::add(std::string name, bool pass, std::string expected, std::string computed, std::string note)
{
    checks.push_back({std::move(name), pass, std::move(expected), std::move(computed), std::move(note)});
    return checks.back();
}

Check& Report::expect_eq(std::string name, const std::string& expected, const std::string& computed, std::string note)
{
    return add(std::move(name), expected == computed, expected, computed, std::move(note));
}

void Report::append(const Report& o)
{
    for (const auto& c : o.checks) {
        Check d = c;
        if (!o.title.empty()) d.name = o.title + ": " + d.name;
        checks.push_back(std::move(d));
    }
}

std::string Report::text() const
{
    std::ostringstream os;
    if (!title.empty()) os << "== " << title << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        if (!c.expected.empty()) os << "    expected: " << c.expected << "\n";
        if (!c.computed.empty()) os << "    computed: " << c.computed << "\n";
        if (!c.note.empty()) os << "    note:     " << c.note << "\n";
    }
    os << (passed() ? "ALL PASS" : "FAILURES: " + std::to_string(failures())) << " (" << checks.size() << " checks)\n";
    return os.str();
}

nlohmann::ordered_json Report::json() const
{
    nlohmann::ordered_json j;
    j["title"] = title;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.expected.empty()) e["expected"] = c.expected;
        if (!c.computed.empty()) e["computed"] = c.computed;
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    j["checks"] = arr;
    return j;
}

}  // namespace equigrass
