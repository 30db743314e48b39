#include "k3gm/report.hpp"

#include <algorithm>

namespace k3gm {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "skipped";
}

bool VerificationReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check &c) { return c.status == Status::Fail; });
}

const Check *VerificationReport::find(const std::string &name) const
{
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

Discrepancy discrepancy(const Mismatch &m)
{
    return {std::to_string(m.monomial.first) + "," + std::to_string(m.monomial.second), to_string(m.lhs),
            to_string(m.rhs)};
}

Discrepancy discrepancy(const std::string &where, const std::string &lhs, const std::string &rhs)
{
    return {where, lhs, rhs};
}

Check compare_series(const std::string &name, const BiSeries &lhs, const BiSeries &rhs, int K1, int K2)
{
    Check c;
    c.name = name;
    int L1 = std::min({K1, lhs.order1(), rhs.order1()});
    int L2 = std::min({K2, lhs.order2(), rhs.order2()});
    c.max_order_checked = std::min(L1, L2) == kExact ? -1 : std::min(L1, L2);
    if (auto m = first_mismatch(lhs, rhs, K1, K2)) {
        c.status = Status::Fail;
        c.first_discrepancy = discrepancy(*m);
    } else {
        c.status = Status::Pass;
    }
    return c;
}

Check exact_check(const std::string &name, bool ok, std::optional<Discrepancy> d)
{
    Check c;
    c.name = name;
    c.status = ok ? Status::Pass : Status::Fail;
    if (!ok) {
        c.first_discrepancy = d ? *d : Discrepancy{"identity", "does not hold", "holds"};
    }
    return c;
}

} // namespace k3gm
