#pragma once

#include <string>
#include <string_view>

#include "hassett/diophantine.hpp"
#include "hassett/families.hpp"
#include "hassett/normal_form.hpp"

namespace hassett {

// Compact JSON with insertion-ordered keys. Integers are emitted as exact
// decimal literals of arbitrary size, which is why this is hand-rolled:
// the artifact's outputs must never pass through a 64-bit or floating
// bottleneck. The byte format matches nlohmann::ordered_json::dump().
class JsonWriter {
public:
    static std::string integer(const Int& v) { return v.str(); }
    static std::string boolean(bool v) { return v ? "true" : "false"; }
    static std::string null() { return "null"; }
    static std::string string(std::string_view s);

    class Array {
    public:
        Array& push(std::string serialized);
        std::string str() const { return "[" + body_ + "]"; }

    private:
        std::string body_;
    };

    class Object {
    public:
        Object& add(std::string_view key, std::string serialized);
        std::string str() const { return "{" + body_ + "}"; }

    private:
        std::string body_;
    };
};

std::string json_coefficients(const IntPolynomial& p);  // ascending-degree array
std::string json_gram(const GramMatrix& g);             // array of row arrays

std::string json_check_report(const ConditionReport& r);
std::string json_canonical_form(const CanonicalForm& f);
std::string json_pell(const Int& D, const Int& N, const PellOutcome& outcome);
std::string json_disc(const GramMatrix& g, const Int& disc);
std::string json_family_list();
std::string json_family_symbolic(const FamilySpec& spec, const SymbolicVerification& v,
                                 bool use_printed_form);
std::string json_family_numeric(const FamilySpec& spec, const std::vector<FamilyRow>& rows,
                                const Int& k_min, const Int& k_max, bool use_printed_form);

std::string text_check_report(const ConditionReport& r);
std::string text_canonical_form(const CanonicalForm& f);
std::string text_pell(const Int& D, const Int& N, const PellOutcome& outcome);
std::string text_family_list();
std::string text_family_symbolic(const FamilySpec& spec, const SymbolicVerification& v,
                                 bool use_printed_form);
std::string text_family_numeric(const FamilySpec& spec, const std::vector<FamilyRow>& rows);
std::string text_enumerate_row(const ConditionReport& r);

std::string csv_report_header();
std::string csv_report_row(const ConditionReport& r);
std::string csv_family_header();
std::string csv_family_row(const FamilyRow& row);

}  // namespace hassett
