// Canonical XML reading/writing for test suites.
//
// Document shape:
//
//   <?xml version="1.0" encoding="UTF-8"?>
//   <testsuite name="...">
//     <test id="...">
//       <preconditions>
//         <condition>...</condition>
//       </preconditions>
//       <steps>
//         <step index="1">
//           <actions>
//             <action>...</action>
//           </actions>
//           <verifications>
//             <verification origin="placeholder">...</verification>
//           </verifications>
//         </step>
//       </steps>
//     </test>
//   </testsuite>
//
// The serializer is canonical: 2-space indentation, double-quoted
// attributes, LF line endings, origin attributes only when not "authored",
// <preconditions> omitted when empty. serialize(parse(doc)) is byte-identical
// for canonical documents.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nltest/model.hpp"

namespace nltest {

class XmlParseError : public std::runtime_error {
 public:
  XmlParseError(const std::string& message, size_t line, size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

struct ParsedSuite {
  TestSuite suite;
  std::vector<std::string> warnings;  // e.g. steps numbered positionally
};

/// Parser seam: the canonical XML reader ships; adapters for other suite
/// formats can implement this interface without touching the pipeline.
class SuiteParser {
 public:
  virtual ~SuiteParser() = default;
  virtual ParsedSuite parse(std::string_view bytes) const = 0;
};

class CanonicalXmlParser final : public SuiteParser {
 public:
  ParsedSuite parse(std::string_view bytes) const override;
};

ParsedSuite parse_suite_xml(std::string_view bytes);
std::string serialize_suite_xml(const TestSuite& suite);

ParsedSuite load_suite_file(const std::string& path);
void write_suite_file(const std::string& path, const TestSuite& suite);

}  // namespace nltest
