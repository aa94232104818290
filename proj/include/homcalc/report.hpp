#ifndef HOMCALC_REPORT_HPP
#define HOMCALC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace homcalc
{

using Json = nlohmann::json;

/// Knobs shared by every randomized checker. Reports record the values they
/// ran with so a failure can be replayed.
struct CheckConfig {
    std::uint64_t seed = 7;
    int trials = 8;
    int max_degree = 2;
    int max_cochain_degree = 2;
    int s_min = 0;
    int s_max = 2;

    Json to_json() const;
};

struct CheckItem {
    std::string name;
    bool passed = true;
    /// Empty on pass; on failure, the arguments and residual that broke the
    /// identity.
    Json witness = Json::object();
    /// Number of identity instances evaluated.
    std::size_t instances = 0;
};

/// Itemized outcome of a checker. A report passes iff every item passes; an
/// empty report passes vacuously.
class Report
{
public:
    Report() = default;
    explicit Report(std::string subject) : m_subject(std::move(subject)) {}

    const std::string &subject() const
    {
        return m_subject;
    }
    const std::vector<CheckItem> &items() const
    {
        return m_items;
    }
    void set_config(Json config)
    {
        m_config = std::move(config);
    }

    void add(CheckItem item)
    {
        m_items.push_back(std::move(item));
    }
    void add_pass(std::string name, std::size_t instances = 1);
    void add_fail(std::string name, Json witness, std::size_t instances = 1);
    /// Appends the items of `other`, prefixing their names with `prefix`.
    void append(const Report &other, const std::string &prefix = {});

    bool passed() const;
    const CheckItem *first_failure() const;
    const CheckItem *find(const std::string &name) const;

    /// {"subject", "config", "checks": [{"check","status","witness"}], "summary"}
    Json to_json() const;
    std::string to_text() const;

private:
    std::string m_subject;
    Json m_config = Json::object();
    std::vector<CheckItem> m_items;
};

/// Accumulates identity instances for one named check, remembering the first
/// failing witness only.
class CheckAccumulator
{
public:
    explicit CheckAccumulator(std::string name) : m_item{std::move(name)} {}

    /// Records one instance; `make_witness` is invoked only for the first
    /// failure.
    template <typename F>
    void record(bool ok, F &&make_witness)
    {
        ++m_item.instances;
        if (!ok && m_item.passed) {
            m_item.passed = false;
            m_item.witness = make_witness();
        }
    }

    bool passed() const
    {
        return m_item.passed;
    }
    CheckItem finish() &&
    {
        return std::move(m_item);
    }

private:
    CheckItem m_item;
};

} // namespace homcalc

#endif
