#ifndef SMC_DOCUMENT_HPP
#define SMC_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "smc/invariants.hpp"
#include "smc/moncat.hpp"

namespace smc {

/// A parsed structure document: either a finite category (optionally with a
/// monoidal section) or a finite monoid. See docs/format.md for the schema.
struct CategoryDocument {
    std::string name;
    CatPtr category;                  // set for kind: category
    MonPtr monoidal;                  // set when a monoidal section is present
    std::optional<FinMonoid> monoid;  // set for kind: monoid

    bool is_monoid() const { return monoid.has_value(); }
};

struct Diagnostic {
    int line = 0;  // 1-based; 0 for document-level problems
    std::string message;

    std::string to_string() const {
        return (line ? "line " + std::to_string(line) + ": " : "") + message;
    }
};

/// Parsing is total: it never throws, and returns either a document or a
/// non-empty list of diagnostics with locations.
struct ParseResult {
    std::optional<CategoryDocument> doc;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return doc.has_value(); }
};

ParseResult parse_document(const std::string& text);

/// Canonical rendering; reparsing yields an identical structure.
std::string serialize_document(const CategoryDocument& doc);

}  // namespace smc

#endif
