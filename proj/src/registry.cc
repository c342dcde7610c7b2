#include <folklab/registry.hh>
#include <folklab/clique.hh>
#include <folklab/expr.hh>

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace folklab
{
    auto to_string(ValueKind k) -> string
    {
        switch (k) {
            case ValueKind::ramsey: return "ramsey";
            case ValueKind::folkman_upper: return "folkman-upper";
            case ValueKind::folkman_lower: return "folkman-lower";
        }
        return "ramsey";
    }

    auto to_string(Provenance p) -> string
    {
        return p == Provenance::verified_in_suite ? "verified-in-suite" : "trusted-literature";
    }

    auto folkman_symbol(const vector<int> & tuple, int q) -> string
    {
        return "F_e(" + ArrowTuple{tuple}.to_string() + ";" + std::to_string(q) + ")";
    }

    auto validate_folkman_q(const ArrowTuple & t, int q) -> bool
    {
        return q > t.max_entry();
    }

    auto KnownValue::statement() const -> string
    {
        switch (kind) {
            case ValueKind::ramsey:
                return "R(" + ArrowTuple{tuple}.to_string() + ") = " + std::to_string(value);
            case ValueKind::folkman_upper:
                return folkman_symbol(tuple, *q) + " <= " + std::to_string(value);
            case ValueKind::folkman_lower:
                return folkman_symbol(tuple, *q) + " >= " + std::to_string(value);
        }
        return "";
    }

    auto KnownValue::to_json() const -> json
    {
        json out{
            {"kind", to_string(kind)},
            {"tuple", tuple},
            {"q", q ? json(*q) : json(nullptr)},
            {"value", value},
            {"statement", statement()},
            {"provenance", to_string(provenance)},
            {"construction", construction.empty() ? json(nullptr) : json(construction)},
            {"source", source}};
        if (! verified_by.empty())
            out["verified_by"] = verified_by;
        return out;
    }

    namespace
    {
        auto trim(string s) -> string
        {
            auto space = [] (unsigned char c) { return std::isspace(c); };
            s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
            s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
            return s;
        }

        auto sha256_hex(const string & text) -> string
        {
            unsigned char digest[EVP_MAX_MD_SIZE];
            unsigned int length = 0;
            EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr);
            static const char * hex = "0123456789abcdef";
            string out;
            for (unsigned int i = 0 ; i < length ; ++i) {
                out.push_back(hex[digest[i] >> 4]);
                out.push_back(hex[digest[i] & 15]);
            }
            return out;
        }

        auto parse_line(const string & line, int line_number) -> KnownValue
        {
            vector<string> fields;
            std::stringstream in(line);
            string field;
            while (std::getline(in, field, '|'))
                fields.push_back(trim(field));
            auto where = [&] { return "registry line " + std::to_string(line_number) + ": "; };
            if (fields.size() != 6 && fields.size() != 7)
                throw ParseError(where() + "expected 6 or 7 '|' separated fields, got " + std::to_string(fields.size()), 0);

            KnownValue v;
            if (fields[0] == "ramsey")
                v.kind = ValueKind::ramsey;
            else if (fields[0] == "folkman-upper")
                v.kind = ValueKind::folkman_upper;
            else if (fields[0] == "folkman-lower")
                v.kind = ValueKind::folkman_lower;
            else
                throw ParseError(where() + "unknown kind '" + fields[0] + "'", 0);

            string params = fields[1];
            auto semicolon = params.find(';');
            if (v.kind == ValueKind::ramsey) {
                if (semicolon != string::npos)
                    throw ParseError(where() + "Ramsey entries take no q", 0);
            }
            else {
                if (semicolon == string::npos)
                    throw ParseError(where() + "Folkman entries need ';q'", 0);
                try {
                    v.q = std::stoi(params.substr(semicolon + 1));
                }
                catch (const std::exception &) {
                    throw ParseError(where() + "bad q '" + params.substr(semicolon + 1) + "'", 0);
                }
                params = params.substr(0, semicolon);
            }
            auto tuple = ArrowTuple::parse(params);
            v.tuple = tuple.entries();
            if (v.kind == ValueKind::ramsey) {
                if (v.tuple.size() != 2)
                    throw ParseError(where() + "Ramsey entries are two-colour", 0);
                std::sort(v.tuple.begin(), v.tuple.end());
            }
            else if (! validate_folkman_q(tuple, *v.q))
                throw ParseError(where() + "Folkman number " + folkman_symbol(v.tuple, *v.q) + " does not exist: q must exceed every entry", 0);

            try {
                v.value = std::stoi(fields[2]);
            }
            catch (const std::exception &) {
                throw ParseError(where() + "bad value '" + fields[2] + "'", 0);
            }

            if (fields[3] == "trusted-literature")
                v.provenance = Provenance::trusted_literature;
            else if (fields[3] == "verified-in-suite")
                v.provenance = Provenance::verified_in_suite;
            else
                throw ParseError(where() + "unknown provenance '" + fields[3] + "'", 0);

            if (fields[4] != "-")
                v.construction = fields[4];
            v.source = fields[5];
            if (fields.size() == 7)
                v.verified_by = fields[6];
            if (v.provenance == Provenance::verified_in_suite && v.verified_by.empty())
                throw ParseError(where() + "verified-in-suite entries must name their verifying check", 0);
            return v;
        }

        auto check_for(const KnownValue & entry) -> HypothesisCheck
        {
            HypothesisCheck check;
            check.label = "verify " + entry.statement();
            check.statement = entry.statement();
            check.evidence["entry"] = entry.to_json();
            return check;
        }

        auto combine(CheckStatus a, CheckStatus b) -> CheckStatus
        {
            if (a == CheckStatus::fail || b == CheckStatus::fail)
                return CheckStatus::fail;
            if (a == CheckStatus::unknown || b == CheckStatus::unknown)
                return CheckStatus::unknown;
            return CheckStatus::pass;
        }
    }

    auto Registry::parse(const string & text) -> Registry
    {
        Registry r;
        r._text = text;
        std::stringstream in(text);
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            auto trimmed = trim(line);
            if (trimmed.empty() || trimmed.front() == '#')
                continue;
            r._entries.push_back(parse_line(trimmed, number));
        }
        return r;
    }

    auto Registry::load(const string & path) -> Registry
    {
        std::ifstream file(path);
        if (! file)
            throw std::runtime_error("cannot open registry file '" + path + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        return parse(buffer.str());
    }

    auto Registry::builtin() -> Registry
    {
        return parse(builtin_registry_text);
    }

    auto Registry::from_environment() -> Registry
    {
        if (const char * path = std::getenv("FOLKLAB_REGISTRY"); path && *path)
            return load(path);
        return builtin();
    }

    auto Registry::ramsey(int s, int t) const -> const KnownValue &
    {
        vector<int> key{std::min(s, t), std::max(s, t)};
        for (auto & e : _entries)
            if (e.kind == ValueKind::ramsey && e.tuple == key)
                return e;
        throw UnknownValueError("R(" + std::to_string(s) + "," + std::to_string(t) + ") is not in the registry");
    }

    auto Registry::folkman_bounds() const -> vector<KnownValue>
    {
        vector<KnownValue> result;
        for (auto & e : _entries)
            if (e.kind != ValueKind::ramsey)
                result.push_back(e);
        return result;
    }

    auto Registry::find_folkman(ValueKind kind, const vector<int> & tuple, int q) const -> const KnownValue *
    {
        for (auto & e : _entries)
            if (e.kind == kind && e.tuple == tuple && e.q == q)
                return &e;
        return nullptr;
    }

    auto Registry::snapshot_hash() const -> string
    {
        return sha256_hex(_text);
    }

    auto Registry::verify_small(std::size_t index, const SearchBudget & budget) -> HypothesisCheck
    {
        auto & entry = _entries.at(index);
        auto check = verify_known_value(entry, budget);
        if (check.status == CheckStatus::pass && entry.provenance == Provenance::trusted_literature) {
            entry.provenance = Provenance::verified_in_suite;
            entry.verified_by = check.label;
        }
        return check;
    }

    auto verify_known_value(const KnownValue & entry, const SearchBudget & budget) -> HypothesisCheck
    {
        auto check = check_for(entry);
        ArrowTuple tuple{entry.tuple};

        switch (entry.kind) {
            case ValueKind::ramsey: {
                int n = entry.value;
                if (n > max_order)
                    throw CapacityError("K_" + std::to_string(n) + " exceeds capacity");

                auto upper = edge_arrows(complete(n), tuple, budget);
                check.evidence["upper"] = json{{"claim", "K_" + std::to_string(n) + " arrows (" + tuple.to_string() + ")"},
                    {"verdict", verdict_json(upper, false)}};
                CheckStatus upper_status = status_for_arrows_claim(upper.outcome);

                CheckStatus lower_status = CheckStatus::unknown;
                json lower{{"claim", "K_" + std::to_string(n - 1) + " has a free colouring for (" + tuple.to_string() + ")"}};
                if (n - 1 < 0)
                    lower_status = CheckStatus::fail;
                else if (! entry.construction.empty()) {
                    Graph witness = parse_expression(entry.construction);
                    if (witness.order() != n - 1) {
                        lower["witness_error"] = "witness has order " + std::to_string(witness.order());
                        lower_status = CheckStatus::fail;
                    }
                    else {
                        auto colouring = EdgeColouring::split(complete(n - 1), witness);
                        bool free = check_edge_colouring_free(complete(n - 1), tuple, colouring);
                        lower["witness"] = entry.construction;
                        lower["witness_free"] = free;
                        lower_status = free ? CheckStatus::pass : CheckStatus::fail;
                    }
                }
                else {
                    auto v = edge_arrows(complete(n - 1), tuple, budget);
                    lower["verdict"] = verdict_json(v, false);
                    lower_status = v.outcome == Outcome::free ? CheckStatus::pass
                        : v.outcome == Outcome::arrows ? CheckStatus::fail : CheckStatus::unknown;
                }
                check.evidence["lower"] = lower;
                check.status = combine(upper_status, lower_status);
                break;
            }

            case ValueKind::folkman_upper: {
                if (entry.construction.empty()) {
                    check.status = CheckStatus::unknown;
                    check.evidence["reason"] = "no construction recorded";
                    break;
                }
                Graph g = parse_expression(entry.construction);
                int cl = clique_number(g).size;
                bool order_ok = g.order() <= entry.value;
                bool clique_ok = cl < *entry.q;
                auto v = edge_arrows(g, tuple, budget);
                check.evidence["construction"] = graph_json(g);
                check.evidence["clique_number"] = cl;
                check.evidence["clique_below_q"] = clique_ok;
                check.evidence["order_within_bound"] = order_ok;
                check.evidence["arrowing"] = verdict_json(v, false);
                CheckStatus structural = order_ok && clique_ok ? CheckStatus::pass : CheckStatus::fail;
                check.status = combine(structural, status_for_arrows_claim(v.outcome));
                break;
            }

            case ValueKind::folkman_lower:
                check.status = CheckStatus::unknown;
                check.evidence["reason"] = "lower bounds quantify over all graphs and are not re-verified";
                break;
        }
        return check;
    }
}
