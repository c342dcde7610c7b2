#pragma once

#include <folklab/arrowing.hh>
#include <folklab/report.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folklab
{
    // Requested value is not in the table; the registry never computes or guesses one.
    class UnknownValueError : public std::out_of_range
    {
        public:
            using std::out_of_range::out_of_range;
    };

    enum class ValueKind { ramsey, folkman_upper, folkman_lower };
    enum class Provenance { trusted_literature, verified_in_suite };

    auto to_string(ValueKind) -> std::string;
    auto to_string(Provenance) -> std::string;

    struct KnownValue
    {
        ValueKind kind;
        std::vector<int> tuple;
        std::optional<int> q;           // Folkman entries only
        int value = 0;
        Provenance provenance = Provenance::trusted_literature;
        std::string construction;       // expression: Ramsey lower-bound witness or Folkman construction
        std::string source;
        std::string verified_by;        // set once provenance is verified-in-suite

        /// "R(3,4) = 9", "F_e(3,5;13) <= 21", "F_e(4,4;17) >= 22"
        auto statement() const -> std::string;
        auto to_json() const -> json;
    };

    /// "F_e(3,5;13)"
    auto folkman_symbol(const std::vector<int> & tuple, int q) -> std::string;

    /// F_e(a_1..a_r; q) exists iff q > max a_i.
    auto validate_folkman_q(const ArrowTuple & t, int q) -> bool;

    /// Table of Ramsey values and Folkman bounds. Text format, one entry per line:
    ///
    ///     kind | tuple[;q] | value | provenance | construction | source [| verified-by]
    ///
    /// kind is ramsey, folkman-upper or folkman-lower; provenance is trusted-literature or
    /// verified-in-suite; construction is an expression or "-". Blank lines and lines starting
    /// with '#' are ignored.
    class Registry
    {
        public:
            static auto parse(const std::string & text) -> Registry;
            static auto load(const std::string & path) -> Registry;
            static auto builtin() -> Registry;

            /// $FOLKLAB_REGISTRY when set, the compiled-in table otherwise.
            static auto from_environment() -> Registry;

            auto ramsey(int s, int t) const -> const KnownValue &;
            auto folkman_bounds() const -> std::vector<KnownValue>;
            auto find_folkman(ValueKind kind, const std::vector<int> & tuple, int q) const -> const KnownValue *;
            auto entries() const -> const std::vector<KnownValue> & { return _entries; }

            /// SHA-256 of the table text the registry was read from.
            auto snapshot_hash() const -> std::string;

            /// Re-verifies a small entry by search; a pass upgrades it to verified-in-suite.
            auto verify_small(std::size_t index, const SearchBudget & budget) -> HypothesisCheck;

        private:
            std::vector<KnownValue> _entries;
            std::string _text;
    };

    /// Verification of one entry without touching any registry.
    auto verify_known_value(const KnownValue & entry, const SearchBudget & budget) -> HypothesisCheck;

    extern const char * const builtin_registry_text;
}
