#include "nltest/lexicon.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nltest {

const char* to_string(Pos pos) {
  switch (pos) {
    case Pos::ADP: return "ADP";
    case Pos::ADV: return "ADV";
    case Pos::NUM: return "NUM";
    case Pos::NOUN: return "NOUN";
    case Pos::PUNCT: return "PUNCT";
    case Pos::VERB: return "VERB";
    case Pos::DET: return "DET";
    case Pos::PRON: return "PRON";
    case Pos::CONJ: return "CONJ";
    case Pos::ADJ: return "ADJ";
    case Pos::PART: return "PART";
    case Pos::X: return "X";
  }
  return "?";
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> phrase_words(const std::string& entry) {
  std::vector<std::string> words;
  std::istringstream is(entry);
  std::string w;
  while (is >> w) words.push_back(w);
  return words;
}

namespace {

void add_all(std::set<std::string>& dst, std::initializer_list<const char*> words) {
  for (const char* w : words) dst.insert(w);
}

void add_closed(std::map<std::string, ClosedClassTag>& dst, Pos pos,
                const char* tag, std::initializer_list<const char*> words) {
  for (const char* w : words) dst[w] = ClosedClassTag{pos, tag};
}

}  // namespace

Lexicon Lexicon::seed() {
  Lexicon lex;

  add_all(lex.action_verbs,
          {"click",      "open",       "select",    "enter",     "press",
           "type",       "launch",     "close",     "drag",      "start",
           "maximize",   "minimize",   "add",       "install",   "uninstall",
           "run",        "plug",       "unplug",    "connect",   "disconnect",
           "reconnect",  "copy",       "paste",     "save",      "delete",
           "remove",     "scroll",     "navigate",  "wait",      "reboot",
           "restart",    "configure",  "enable",    "disable",   "insert",
           "eject",      "choose",     "create",    "download",  "upload",
           "move",       "rename",     "edit",      "search",    "switch",
           "turn",       "set",        "clear",     "refresh",   "reload",
           "log",        "attach",     "play",      "pause",     "stop",
           "record",     "import",     "export",    "mount",     "unmount",
           "browse",     "visit",      "go",        "double-click",
           "right-click","tap",        "swipe",     "hold",      "release",
           "resize",     "restore",    "apply",     "cancel",    "dismiss",
           "expand",     "collapse",   "toggle",    "drop",      "fill",
           "submit",     "send",       "compose",   "reply",     "forward",
           "update",     "upgrade",    "change",    "adjust",    "repeat",
           "undo",       "redo",       "boot",      "check",     "show",
           "hide",       "follow",     "drag-and-drop", "use",   "shut",
           "sign",       "format"});

  add_all(lex.verification_cues,
          {"verify", "confirm", "check that", "check whether", "notice",
           "notice that", "observe", "should", "appears", "appear",
           "is displayed", "are displayed", "is shown", "are shown",
           "is visible", "are visible", "will appear", "will be", "must be"});

  add_all(lex.precondition_cues, {"ensure", "make sure", "this test requires"});

  add_all(lex.connectors, {"and", "then", "and then", "after that", "next", ";"});

  add_all(lex.ambiguity_terms,
          {"approximately", "quickly", "slowly", "properly", "correctly",
           "accurately", "carefully", "roughly", "briefly", "gently",
           "promptly", "repeatedly", "randomly", "periodically",
           "momentarily", "any", "some", "several", "a few", "etc",
           "various", "something", "anything", "a couple of"});

  auto& cc = lex.closed_class;
  add_closed(cc, Pos::DET, "DT",
             {"the", "a", "an", "this", "that", "these", "those", "any",
              "some", "several", "each", "every", "all", "both", "either",
              "neither", "no", "another", "such", "what", "which"});
  add_closed(cc, Pos::ADP, "IN",
             {"in", "on", "at", "by", "for", "with", "from", "of", "into",
              "onto", "after", "before", "during", "under", "over", "about",
              "above", "across", "against", "along", "among", "around",
              "behind", "below", "beneath", "beside", "between", "beyond",
              "down", "inside", "near", "off", "out", "outside", "through",
              "toward", "towards", "up", "upon", "within", "without", "via",
              "per", "until", "till", "since", "if", "because", "although",
              "though", "while", "whereas", "unless", "when", "whenever",
              "once", "as", "than", "whether"});
  add_closed(cc, Pos::PRON, "PRP",
             {"i", "you", "he", "she", "it", "we", "they", "me", "him",
              "her", "us", "them", "my", "your", "his", "its", "our",
              "their", "mine", "yours", "anyone", "someone", "everyone",
              "everything", "nothing", "none"});
  add_closed(cc, Pos::CONJ, "CC", {"and", "or", "but", "nor", "so", "yet"});
  add_closed(cc, Pos::NUM, "CD",
             {"zero", "one", "two", "three", "four", "five", "six", "seven",
              "eight", "nine", "ten", "eleven", "twelve", "twenty", "thirty",
              "hundred"});
  // Auxiliaries and modals: never treated as imperatives.
  add_closed(cc, Pos::VERB, "VBZ", {"is", "does", "has"});
  add_closed(cc, Pos::VERB, "VBP", {"are", "am", "have", "do"});
  add_closed(cc, Pos::VERB, "VBD", {"was", "were", "did", "had"});
  add_closed(cc, Pos::VERB, "VB", {"be"});
  add_closed(cc, Pos::VERB, "VBN", {"been", "done"});
  add_closed(cc, Pos::VERB, "VBG", {"being", "having"});
  add_closed(cc, Pos::VERB, "MD",
             {"will", "would", "can", "could", "may", "might", "must",
              "shall", "should"});
  // Closed-class adverbs; dep stays "other" so they are never reported as
  // manner adverbs.
  add_closed(cc, Pos::ADV, "RB",
             {"then", "now", "here", "there", "again", "too", "very", "just",
              "only", "already", "soon", "still", "never", "always", "often",
              "sometimes", "twice", "please", "afterwards", "next"});
  add_closed(cc, Pos::PART, "TO", {"to"});
  add_closed(cc, Pos::PART, "RB", {"not"});

  return lex;
}

namespace {

void load_file_into(const std::filesystem::path& file, std::set<std::string>& dst) {
  std::ifstream in(file);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string entry;
    // collapse interior whitespace so phrase entries are canonical
    std::istringstream is(line);
    std::string w;
    while (is >> w) {
      if (!entry.empty()) entry += ' ';
      entry += ascii_lower(w);
    }
    if (!entry.empty()) dst.insert(entry);
  }
}

void load_closed_into(const std::filesystem::path& file, Pos pos, const char* tag,
                      std::map<std::string, ClosedClassTag>& dst) {
  std::set<std::string> words;
  load_file_into(file, words);
  for (const std::string& w : words) dst[w] = ClosedClassTag{pos, tag};
}

}  // namespace

void Lexicon::merge_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  if (!fs::is_directory(root))
    throw std::runtime_error("lexicon directory not found: " + dir);

  load_file_into(root / "action_verbs.txt", action_verbs);
  load_file_into(root / "verification_cues.txt", verification_cues);
  load_file_into(root / "precondition_cues.txt", precondition_cues);
  load_file_into(root / "connectors.txt", connectors);
  load_file_into(root / "ambiguity_terms.txt", ambiguity_terms);
  load_closed_into(root / "determiners.txt", Pos::DET, "DT", closed_class);
  load_closed_into(root / "prepositions.txt", Pos::ADP, "IN", closed_class);
  load_closed_into(root / "pronouns.txt", Pos::PRON, "PRP", closed_class);
  load_closed_into(root / "conjunctions.txt", Pos::CONJ, "CC", closed_class);
  load_closed_into(root / "numerals.txt", Pos::NUM, "CD", closed_class);
  load_closed_into(root / "auxiliaries.txt", Pos::VERB, "MD", closed_class);
  load_closed_into(root / "adverbs.txt", Pos::ADV, "RB", closed_class);
}

bool Lexicon::is_action_verb(const std::string& lower) const {
  return action_verbs.count(lower) > 0;
}

bool Lexicon::is_connector_word(const std::string& lower) const {
  return connectors.count(lower) > 0;
}

bool Lexicon::knows_word(const std::string& lower) const {
  if (closed_class.count(lower) || action_verbs.count(lower) ||
      ambiguity_terms.count(lower))
    return true;
  // single-word cue entries
  if (verification_cues.count(lower) || precondition_cues.count(lower)) return true;
  return false;
}

}  // namespace nltest
