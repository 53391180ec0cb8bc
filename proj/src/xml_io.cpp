#include "nltest/xml_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nltest {

namespace {

struct XmlAttr {
  std::string name;
  std::string value;
};

struct XmlNode {
  std::string name;
  std::vector<XmlAttr> attrs;
  std::vector<XmlNode> children;
  std::string text;
  size_t line = 1;
  size_t column = 1;

  const std::string* attr(const std::string& key) const {
    for (const XmlAttr& a : attrs)
      if (a.name == key) return &a.value;
    return nullptr;
  }
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool starts_with(std::string_view s) const {
    return text_.compare(pos_, s.size(), s) == 0;
  }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void advance(size_t n) {
    for (size_t i = 0; i < n && !eof(); ++i) take();
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw XmlParseError(message, line_, column_);
  }

  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t column_ = 1;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == ':' || c == '.';
}

std::string decode_entity(Cursor& cur) {
  // cur sits on '&'
  cur.take();
  std::string entity;
  while (!cur.eof() && cur.peek() != ';') {
    entity.push_back(cur.take());
    if (entity.size() > 10) cur.fail("malformed entity reference");
  }
  if (cur.eof()) cur.fail("unterminated entity reference");
  cur.take();  // ';'
  if (entity == "amp") return "&";
  if (entity == "lt") return "<";
  if (entity == "gt") return ">";
  if (entity == "quot") return "\"";
  if (entity == "apos") return "'";
  if (!entity.empty() && entity[0] == '#') {
    int base = 10;
    size_t start = 1;
    if (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X')) {
      base = 16;
      start = 2;
    }
    unsigned long code = 0;
    try {
      code = std::stoul(entity.substr(start), nullptr, base);
    } catch (const std::exception&) {
      cur.fail("malformed numeric character reference '&" + entity + ";'");
    }
    // encode as UTF-8
    std::string out;
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
    return out;
  }
  cur.fail("unknown entity '&" + entity + ";'");
}

void skip_comment(Cursor& cur) {
  // cur sits on "<!--"
  cur.advance(4);
  while (!cur.eof()) {
    if (cur.starts_with("-->")) {
      cur.advance(3);
      return;
    }
    cur.take();
  }
  cur.fail("unterminated comment");
}

XmlNode parse_element(Cursor& cur) {
  XmlNode node;
  node.line = cur.line();
  node.column = cur.column();
  cur.take();  // '<'
  if (cur.eof() || !name_char(cur.peek())) cur.fail("expected element name");
  while (!cur.eof() && name_char(cur.peek())) node.name.push_back(cur.take());

  // attributes
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) cur.fail("unterminated start tag <" + node.name + ">");
    if (cur.peek() == '>') {
      cur.take();
      break;
    }
    if (cur.starts_with("/>")) {
      cur.advance(2);
      return node;
    }
    XmlAttr attr;
    if (!name_char(cur.peek())) cur.fail("expected attribute name");
    while (!cur.eof() && name_char(cur.peek())) attr.name.push_back(cur.take());
    cur.skip_ws();
    if (cur.eof() || cur.peek() != '=') cur.fail("expected '=' after attribute name");
    cur.take();
    cur.skip_ws();
    if (cur.eof() || (cur.peek() != '"' && cur.peek() != '\''))
      cur.fail("expected quoted attribute value");
    char quote = cur.take();
    while (!cur.eof() && cur.peek() != quote) {
      if (cur.peek() == '&') attr.value += decode_entity(cur);
      else attr.value.push_back(cur.take());
    }
    if (cur.eof()) cur.fail("unterminated attribute value");
    cur.take();  // closing quote
    if (node.attr(attr.name)) cur.fail("duplicate attribute '" + attr.name + "'");
    node.attrs.push_back(std::move(attr));
  }

  // content
  for (;;) {
    if (cur.eof()) cur.fail("missing closing tag </" + node.name + ">");
    if (cur.peek() == '<') {
      if (cur.starts_with("<!--")) {
        skip_comment(cur);
        continue;
      }
      if (cur.starts_with("<![CDATA[")) cur.fail("CDATA sections are not supported");
      if (cur.starts_with("</")) {
        cur.advance(2);
        std::string close;
        while (!cur.eof() && name_char(cur.peek())) close.push_back(cur.take());
        cur.skip_ws();
        if (cur.eof() || cur.peek() != '>') cur.fail("malformed closing tag");
        cur.take();
        if (close != node.name)
          cur.fail("mismatched closing tag </" + close + "> for <" + node.name + ">");
        return node;
      }
      node.children.push_back(parse_element(cur));
      continue;
    }
    if (cur.peek() == '&') {
      node.text += decode_entity(cur);
      continue;
    }
    node.text.push_back(cur.take());
  }
}

XmlNode parse_document(std::string_view bytes) {
  Cursor cur(bytes);
  cur.skip_ws();
  if (cur.starts_with("<?xml")) {
    while (!cur.eof() && !cur.starts_with("?>")) cur.take();
    if (cur.eof()) cur.fail("unterminated XML declaration");
    cur.advance(2);
  }
  for (;;) {
    cur.skip_ws();
    if (cur.starts_with("<!--")) {
      skip_comment(cur);
      continue;
    }
    break;
  }
  if (cur.eof() || cur.peek() != '<') cur.fail("expected root element");
  XmlNode root = parse_element(cur);
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) break;
    if (cur.starts_with("<!--")) {
      skip_comment(cur);
      continue;
    }
    cur.fail("unexpected content after root element");
  }
  return root;
}

bool only_whitespace(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void fail_at(const XmlNode& node, const std::string& message) {
  throw XmlParseError(message, node.line, node.column);
}

std::string text_content(const XmlNode& node) {
  if (!node.children.empty())
    fail_at(node.children.front(), "unexpected child element in <" + node.name + ">");
  return node.text;
}

void check_no_text(const XmlNode& node) {
  if (!only_whitespace(node.text))
    fail_at(node, "unexpected text in <" + node.name + ">");
}

Origin parse_origin(const XmlNode& node) {
  const std::string* raw = node.attr("origin");
  if (!raw || *raw == "authored") return Origin::Authored;
  if (*raw == "placeholder") return Origin::Placeholder;
  if (*raw == "rewritten") return Origin::Rewritten;
  fail_at(node, "invalid origin '" + *raw + "'");
}

Sentence parse_sentence(const XmlNode& node) {
  Sentence sentence;
  sentence.text = text_content(node);
  if (only_whitespace(sentence.text))
    fail_at(node, "empty <" + node.name + "> text");
  sentence.origin = parse_origin(node);
  return sentence;
}

Step parse_step(const XmlNode& node, size_t position, const std::string& test_id,
                std::vector<std::string>& warnings) {
  Step step;
  check_no_text(node);
  const std::string* index_attr = node.attr("index");
  if (index_attr) {
    try {
      size_t used = 0;
      step.index = std::stoi(*index_attr, &used);
      if (used != index_attr->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail_at(node, "invalid step index '" + *index_attr + "'");
    }
  } else {
    step.index = static_cast<int>(position);
    warnings.push_back("test '" + test_id + "': step without index attribute" +
                       " numbered positionally as " + std::to_string(position));
  }

  bool saw_actions = false, saw_verifications = false;
  for (const XmlNode& child : node.children) {
    if (child.name == "actions") {
      if (saw_actions) fail_at(child, "duplicate <actions>");
      saw_actions = true;
      check_no_text(child);
      for (const XmlNode& a : child.children) {
        if (a.name != "action") fail_at(a, "unexpected element <" + a.name + ">");
        step.actions.push_back(parse_sentence(a));
      }
    } else if (child.name == "verifications") {
      if (saw_verifications) fail_at(child, "duplicate <verifications>");
      saw_verifications = true;
      check_no_text(child);
      for (const XmlNode& v : child.children) {
        if (v.name != "verification")
          fail_at(v, "unexpected element <" + v.name + ">");
        step.verifications.push_back(parse_sentence(v));
      }
    } else {
      fail_at(child, "unexpected element <" + child.name + "> in <step>");
    }
  }
  return step;
}

TestCase parse_test(const XmlNode& node, std::vector<std::string>& warnings) {
  TestCase test;
  const std::string* id = node.attr("id");
  if (!id) fail_at(node, "<test> missing id attribute");
  test.id = *id;

  bool saw_preconditions = false, saw_steps = false;
  for (const XmlNode& child : node.children) {
    if (child.name == "preconditions") {
      if (saw_preconditions) fail_at(child, "duplicate <preconditions>");
      saw_preconditions = true;
      check_no_text(child);
      for (const XmlNode& c : child.children) {
        if (c.name != "condition") fail_at(c, "unexpected element <" + c.name + ">");
        std::string text = text_content(c);
        if (only_whitespace(text)) fail_at(c, "empty <condition> text");
        test.preconditions.push_back(std::move(text));
      }
    } else if (child.name == "steps") {
      if (saw_steps) fail_at(child, "duplicate <steps>");
      saw_steps = true;
      check_no_text(child);
      size_t position = 0;
      for (const XmlNode& s : child.children) {
        if (s.name != "step") fail_at(s, "unexpected element <" + s.name + ">");
        ++position;
        test.steps.push_back(parse_step(s, position, test.id, warnings));
      }
    } else {
      fail_at(child, "unexpected element <" + child.name + "> in <test>");
    }
  }
  return test;
}

}  // namespace

ParsedSuite CanonicalXmlParser::parse(std::string_view bytes) const {
  XmlNode root = parse_document(bytes);
  if (root.name != "testsuite")
    fail_at(root, "unknown root element <" + root.name + ">");
  check_no_text(root);

  ParsedSuite parsed;
  if (const std::string* name = root.attr("name")) parsed.suite.name = *name;
  for (const XmlNode& child : root.children) {
    if (child.name != "test")
      fail_at(child, "unexpected element <" + child.name + "> in <testsuite>");
    check_no_text(child);
    parsed.suite.tests.push_back(parse_test(child, parsed.warnings));
  }
  return parsed;
}

ParsedSuite parse_suite_xml(std::string_view bytes) {
  return CanonicalXmlParser().parse(bytes);
}

namespace {

std::string escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attr(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void write_sentence_list(std::ostream& os, const std::vector<Sentence>& list,
                         const char* container, const char* element) {
  if (list.empty()) {
    os << "        <" << container << "/>\n";
    return;
  }
  os << "        <" << container << ">\n";
  for (const Sentence& s : list) {
    os << "          <" << element;
    if (s.origin == Origin::Placeholder) os << " origin=\"placeholder\"";
    else if (s.origin == Origin::Rewritten) os << " origin=\"rewritten\"";
    os << ">" << escape_text(s.text) << "</" << element << ">\n";
  }
  os << "        </" << container << ">\n";
}

}  // namespace

std::string serialize_suite_xml(const TestSuite& suite) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (suite.tests.empty()) {
    os << "<testsuite name=\"" << escape_attr(suite.name) << "\"/>\n";
    return os.str();
  }
  os << "<testsuite name=\"" << escape_attr(suite.name) << "\">\n";
  for (const TestCase& test : suite.tests) {
    os << "  <test id=\"" << escape_attr(test.id) << "\">\n";
    if (!test.preconditions.empty()) {
      os << "    <preconditions>\n";
      for (const std::string& clause : test.preconditions)
        os << "      <condition>" << escape_text(clause) << "</condition>\n";
      os << "    </preconditions>\n";
    }
    if (test.steps.empty()) {
      os << "    <steps/>\n";
    } else {
      os << "    <steps>\n";
      for (const Step& step : test.steps) {
        os << "      <step index=\"" << step.index << "\">\n";
        write_sentence_list(os, step.actions, "actions", "action");
        write_sentence_list(os, step.verifications, "verifications", "verification");
        os << "      </step>\n";
      }
      os << "    </steps>\n";
    }
    os << "  </test>\n";
  }
  os << "</testsuite>\n";
  return os.str();
}

ParsedSuite load_suite_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_suite_xml(buffer.str());
}

void write_suite_file(const std::string& path, const TestSuite& suite) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_suite_xml(suite);
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace nltest
