/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_VERIFY_REPORT_HH
#define ORDSUB_GUARD_ORDSUB_VERIFY_REPORT_HH 1

#include <optional>
#include <string>
#include <vector>

namespace ordsub
{
    // Outcome of checking a property. A failed check names the offending vertices
    // (0-based, in the order the property quantifies them) and a short reason code.
    struct VerifyReport
    {
        bool ok = true;
        std::optional<std::vector<int>> witness;
        std::string detail;

        [[nodiscard]] static auto pass() -> VerifyReport
        {
            return VerifyReport{ };
        }

        [[nodiscard]] static auto fail(std::vector<int> witness, std::string detail) -> VerifyReport
        {
            return VerifyReport{ false, std::move(witness), std::move(detail) };
        }

        explicit operator bool() const
        {
            return ok;
        }
    };
}

#endif
