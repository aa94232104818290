#include <homcalc/report.hpp>

#include <sstream>

namespace homcalc
{

Json CheckConfig::to_json() const
{
    return Json{{"seed", seed},
                {"trials", trials},
                {"max_degree", max_degree},
                {"max_cochain_degree", max_cochain_degree},
                {"s_range", Json::array({s_min, s_max})}};
}

void Report::add_pass(std::string name, std::size_t instances)
{
    m_items.push_back(CheckItem{std::move(name), true, Json::object(), instances});
}

void Report::add_fail(std::string name, Json witness, std::size_t instances)
{
    m_items.push_back(CheckItem{std::move(name), false, std::move(witness), instances});
}

void Report::append(const Report &other, const std::string &prefix)
{
    for (const auto &item : other.m_items) {
        CheckItem copy = item;
        copy.name = prefix + copy.name;
        m_items.push_back(std::move(copy));
    }
}

bool Report::passed() const
{
    return first_failure() == nullptr;
}

const CheckItem *Report::first_failure() const
{
    for (const auto &item : m_items) {
        if (!item.passed) {
            return &item;
        }
    }
    return nullptr;
}

const CheckItem *Report::find(const std::string &name) const
{
    for (const auto &item : m_items) {
        if (item.name == name) {
            return &item;
        }
    }
    return nullptr;
}

Json Report::to_json() const
{
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto &item : m_items) {
        checks.push_back(Json{{"check", item.name},
                              {"status", item.passed ? "pass" : "fail"},
                              {"instances", item.instances},
                              {"witness", item.witness}});
        failed += item.passed ? 0 : 1;
    }
    return Json{{"subject", m_subject},
                {"config", m_config},
                {"checks", std::move(checks)},
                {"summary",
                 {{"total", m_items.size()},
                  {"passed", m_items.size() - failed},
                  {"failed", failed},
                  {"status", failed == 0 ? "pass" : "fail"}}}};
}

std::string Report::to_text() const
{
    std::ostringstream os;
    if (!m_subject.empty()) {
        os << m_subject << '\n';
    }
    std::size_t failed = 0;
    for (const auto &item : m_items) {
        os << (item.passed ? "  PASS  " : "  FAIL  ") << item.name;
        if (item.instances > 1) {
            os << "  (" << item.instances << " instances)";
        }
        os << '\n';
        if (!item.passed) {
            ++failed;
            os << "        witness: " << item.witness.dump() << '\n';
        }
    }
    os << (failed == 0 ? "PASS" : "FAIL") << ": " << (m_items.size() - failed) << '/'
       << m_items.size() << " checks passed\n";
    return os.str();
}

} // namespace homcalc
