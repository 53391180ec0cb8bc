#include "nltest/annotate.hpp"

#include <algorithm>
#include <cctype>

namespace nltest {

const char* to_string(Dep dep) {
  switch (dep) {
    case Dep::Root: return "ROOT";
    case Dep::Advmod: return "advmod";
    case Dep::Other: return "other";
  }
  return "?";
}

const char* to_string(SentenceRole role) {
  switch (role) {
    case SentenceRole::Action: return "Action";
    case SentenceRole::Verification: return "Verification";
    case SentenceRole::Precondition: return "Precondition";
  }
  return "?";
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }

bool all_alpha(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c));
  });
}

bool is_numeral(const std::string& s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c != '.' && c != ',') return false;
  }
  return digit;
}

bool sentence_final(const Token& t) {
  return !t.is_word && (t.text == "." || t.text == "!" || t.text == "?");
}

bool is_clause_comma(const Token& t) {
  return !t.is_word && (t.text == "," || t.text == ";");
}

std::string punct_tag(const std::string& t) {
  if (t == "." || t == "!" || t == "?") return ".";
  if (t == ";" || t == ":") return ":";
  return t;
}

std::vector<std::pair<size_t, size_t>> specify_spans(const std::string& text) {
  std::vector<std::pair<size_t, size_t>> spans;
  const std::string open = "<<SPECIFY:";
  size_t pos = 0;
  while ((pos = text.find(open, pos)) != std::string::npos) {
    size_t close = text.find(">>", pos + open.size());
    if (close == std::string::npos) break;
    spans.emplace_back(pos, close + 2);
    pos = close + 2;
  }
  return spans;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Token tok;
    tok.begin = i;
    if (is_word_char(text[i])) {
      size_t j = i;
      while (j < n) {
        if (is_word_char(text[j])) {
          ++j;
          continue;
        }
        // internal hyphen/apostrophe/dot stay inside the token
        if ((text[j] == '-' || text[j] == '\'' || text[j] == '.') && j > i &&
            j + 1 < n && is_word_char(text[j + 1])) {
          ++j;
          continue;
        }
        break;
      }
      tok.end = j;
      tok.is_word = true;
      i = j;
    } else {
      tok.end = i + 1;
      i = i + 1;
    }
    tok.text = text.substr(tok.begin, tok.end - tok.begin);
    tok.lower = ascii_lower(tok.text);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

bool single_word_cue(const std::string& lower, const Lexicon& lex) {
  if (lex.closed_class.count(lower)) return false;
  return lex.verification_cues.count(lower) > 0 ||
         lex.precondition_cues.count(lower) > 0;
}

bool ends_with(const std::string& s, const char* suffix) {
  std::string_view sv(suffix);
  return s.size() >= sv.size() && s.compare(s.size() - sv.size(), sv.size(), sv) == 0;
}

void tag_word(Token& tok, const Lexicon& lex) {
  auto cc = lex.closed_class.find(tok.lower);
  if (cc != lex.closed_class.end()) {
    tok.pos = cc->second.pos;
    tok.tag = cc->second.tag;
    if (tok.pos == Pos::NUM) tok.morph.push_back("NumType=Card");
    return;
  }
  if (is_numeral(tok.lower)) {
    tok.pos = Pos::NUM;
    tok.tag = "CD";
    tok.morph.push_back("NumType=Card");
    return;
  }
  if (lex.action_verbs.count(tok.lower)) {
    tok.pos = Pos::VERB;
    tok.tag = "VB";
    return;
  }
  bool single_ambiguity =
      lex.ambiguity_terms.count(tok.lower) > 0;  // phrase entries never match one token
  if ((ends_with(tok.lower, "ly") && tok.lower.size() > 3) || single_ambiguity) {
    tok.pos = Pos::ADV;
    tok.tag = "RB";
    tok.dep = Dep::Advmod;
    return;
  }
  if (single_word_cue(tok.lower, lex)) {
    tok.pos = Pos::VERB;
    tok.tag = ends_with(tok.lower, "s") ? "VBZ" : "VB";
    return;
  }
  if (ends_with(tok.lower, "s") && !ends_with(tok.lower, "ss") && tok.lower.size() > 2) {
    std::string stem = tok.lower.substr(0, tok.lower.size() - 1);
    std::string stem_es =
        ends_with(tok.lower, "es") ? tok.lower.substr(0, tok.lower.size() - 2) : "";
    if (lex.action_verbs.count(stem) || single_word_cue(stem, lex) ||
        (!stem_es.empty() &&
         (lex.action_verbs.count(stem_es) || single_word_cue(stem_es, lex)))) {
      tok.pos = Pos::VERB;
      tok.tag = "VBZ";
      return;
    }
    tok.pos = Pos::NOUN;
    tok.tag = "NNS";
    tok.morph.push_back("Number=Plur");
    return;
  }
  tok.pos = Pos::NOUN;
  tok.tag = "NN";
}

// Longest connector phrase (in tokens) starting at word token i; 0 if none.
size_t match_connector_phrase(const std::vector<Token>& tokens, size_t i,
                              const Lexicon& lex) {
  size_t best = 0;
  for (const std::string& entry : lex.connectors) {
    if (entry == ";") continue;  // handled as punctuation
    std::vector<std::string> words = phrase_words(entry);
    if (words.size() <= best) continue;
    bool ok = true;
    for (size_t k = 0; k < words.size(); ++k) {
      size_t idx = i + k;
      if (idx >= tokens.size() || !tokens[idx].is_word || tokens[idx].masked ||
          tokens[idx].lower != words[k]) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, words.size());
  }
  return best;
}

struct VerbMark {
  size_t token = 0;
  bool action = false;  // from the action lexicon / unknown-verb rule
};

struct SplitPoint {
  size_t sep_first = 0;   // first separator token (run may be empty)
  size_t sep_count = 0;   // separator tokens consumed by the boundary
};

struct ClauseScan {
  std::vector<VerbMark> marks;
  std::vector<SplitPoint> splits;  // one per action imperative beyond the first clause
};

bool next_word_is_nominal(const std::vector<Token>& tokens, size_t i) {
  for (size_t j = i + 1; j < tokens.size(); ++j) {
    if (tokens[j].masked || !tokens[j].is_word) continue;
    return tokens[j].pos == Pos::DET || tokens[j].pos == Pos::NOUN ||
           tokens[j].pos == Pos::NUM || tokens[j].pos == Pos::PRON;
  }
  return false;
}

// Walks the token stream tracking clause windows. A window opens at the
// sentence start, after sentence-final punctuation, and after separator runs
// (commas/semicolons/connector phrases at bracket depth zero). The first
// plausible verb inside a window is marked; action verbs found in
// separator-opened windows become split points.
ClauseScan scan_clauses(const std::vector<Token>& tokens, const Lexicon& lex) {
  ClauseScan out;
  const size_t n = tokens.size();
  int depth = 0;
  bool window = true;
  bool sentence_start = true;
  bool first_window = true;
  size_t sep_first = 0, sep_count = 0;

  auto open_separator_run = [&](size_t start, size_t initial) {
    size_t run_end = initial;
    while (run_end < n) {
      const Token& u = tokens[run_end];
      if (u.masked) break;
      if (is_clause_comma(u) && depth == 0) {
        ++run_end;
        continue;
      }
      if (u.is_word) {
        size_t matched = match_connector_phrase(tokens, run_end, lex);
        if (matched > 0) {
          run_end += matched;
          continue;
        }
      }
      break;
    }
    window = true;
    sentence_start = false;
    first_window = false;
    sep_first = start;
    sep_count = run_end - start;
    return run_end;
  };

  size_t i = 0;
  while (i < n) {
    const Token& t = tokens[i];
    if (t.masked) {
      ++i;
      continue;
    }
    if (!t.is_word) {
      if (t.text == "(" || t.text == "[") {
        ++depth;
        window = false;
        ++i;
        continue;
      }
      if (t.text == ")" || t.text == "]") {
        if (depth > 0) --depth;
        ++i;
        continue;
      }
      if (depth == 0) {
        if (sentence_final(t)) {
          window = true;
          sentence_start = true;
          first_window = false;
          sep_first = i + 1;
          sep_count = 0;
          ++i;
          continue;
        }
        if (is_clause_comma(t)) {
          i = open_separator_run(i, i + 1);
          continue;
        }
      }
      // quotes, brackets at depth, misc punctuation: window state unchanged
      ++i;
      continue;
    }
    if (depth > 0) {
      ++i;
      continue;
    }
    if (!window) {
      size_t matched = match_connector_phrase(tokens, i, lex);
      if (matched > 0) {
        i = open_separator_run(i, i + matched);
        continue;
      }
      ++i;
      continue;
    }
    // inside a window: skip connectors, adverbs and particles
    if (lex.is_connector_word(t.lower) || t.pos == Pos::ADV || t.pos == Pos::PART) {
      ++i;
      continue;
    }
    // candidate token
    bool was_first_window = first_window;
    window = false;
    if (!lex.closed_class.count(t.lower)) {
      if (lex.action_verbs.count(t.lower)) {
        out.marks.push_back({i, true});
        if (!was_first_window) out.splits.push_back({sep_first, sep_count});
      } else if (single_word_cue(t.lower, lex)) {
        out.marks.push_back({i, false});
      } else if (sentence_start && is_upper(t.text[0]) && all_alpha(t.text) &&
                 !lex.knows_word(t.lower) && next_word_is_nominal(tokens, i)) {
        out.marks.push_back({i, true});
        if (!was_first_window) out.splits.push_back({sep_first, sep_count});
      }
    }
    ++i;
  }
  return out;
}

std::string token_span(const std::string& text, const std::vector<Token>& tokens,
                       size_t first, size_t last) {
  if (first > last || last >= tokens.size()) return "";
  return text.substr(tokens[first].begin, tokens[last].end - tokens[first].begin);
}

// Sentence sub-ranges split at sentence-final punctuation (depth zero); the
// final punctuation token belongs to its sentence.
std::vector<std::pair<size_t, size_t>> sentence_ranges(const std::vector<Token>& tokens) {
  std::vector<std::pair<size_t, size_t>> ranges;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.is_word) {
      if (t.text == "(" || t.text == "[") ++depth;
      else if (t.text == ")" || t.text == "]") { if (depth > 0) --depth; }
      else if (depth == 0 && sentence_final(t)) {
        ranges.emplace_back(start, i);
        start = i + 1;
      }
    }
  }
  if (start < tokens.size()) ranges.emplace_back(start, tokens.size() - 1);
  return ranges;
}

}  // namespace

std::string normalize_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string normalize_clause_text(const std::string& text) {
  std::string s = normalize_whitespace(text);
  for (;;) {
    while (!s.empty() && (s.front() == ',' || s.front() == ';' || s.front() == ' '))
      s.erase(s.begin());
    size_t word_end = 0;
    while (word_end < s.size() &&
           std::isalpha(static_cast<unsigned char>(s[word_end])))
      ++word_end;
    std::string head = ascii_lower(s.substr(0, word_end));
    if ((head == "then" || head == "and") && word_end < s.size() &&
        (s[word_end] == ' ' || s[word_end] == ',')) {
      s.erase(0, word_end);
      continue;
    }
    break;
  }
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '\'' && c != '"')
      break;
  }
  return s;
}

AnnotatedSentence tokenize_and_tag(const Sentence& sentence, const Lexicon& lexicon) {
  AnnotatedSentence ann;
  ann.source = sentence;
  ann.tokens = tokenize(sentence.text);

  for (auto [b, e] : specify_spans(sentence.text)) {
    for (Token& tok : ann.tokens)
      if (tok.begin >= b && tok.end <= e) tok.masked = true;
  }

  for (Token& tok : ann.tokens) {
    if (!tok.is_word) {
      tok.pos = Pos::PUNCT;
      tok.tag = punct_tag(tok.text);
      continue;
    }
    tag_word(tok, lexicon);
  }

  ClauseScan scan = scan_clauses(ann.tokens, lexicon);
  bool root_assigned = false;
  for (const VerbMark& mark : scan.marks) {
    Token& tok = ann.tokens[mark.token];
    tok.pos = Pos::VERB;
    tok.tag = "VB";
    tok.dep = Dep::Other;
    if (std::find(tok.morph.begin(), tok.morph.end(), "VerbForm=Inf") ==
        tok.morph.end())
      tok.morph.push_back("VerbForm=Inf");
    if (!root_assigned) {
      tok.dep = Dep::Root;
      root_assigned = true;
    }
    if (mark.action) ann.imperative_verbs.push_back(mark.token);
  }

  for (size_t i = 0; i < ann.tokens.size(); ++i) {
    const Token& tok = ann.tokens[i];
    if (tok.pos == Pos::ADV && tok.tag == "RB" && tok.dep == Dep::Advmod &&
        !tok.masked)
      ann.manner_adverbs.push_back(i);
  }

  // ambiguity-lexicon matches, longest phrase first at each position
  std::vector<std::pair<std::vector<std::string>, std::string>> phrases;
  for (const std::string& entry : lexicon.ambiguity_terms) {
    std::vector<std::string> words = phrase_words(entry);
    if (words.size() > 1) phrases.emplace_back(std::move(words), entry);
  }
  std::sort(phrases.begin(), phrases.end(),
            [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  for (size_t i = 0; i < ann.tokens.size(); ++i) {
    const Token& tok = ann.tokens[i];
    if (!tok.is_word || tok.masked) continue;
    size_t matched = 0;
    for (const auto& [words, entry] : phrases) {
      bool ok = true;
      for (size_t k = 0; k < words.size(); ++k) {
        size_t idx = i + k;
        if (idx >= ann.tokens.size() || !ann.tokens[idx].is_word ||
            ann.tokens[idx].masked || ann.tokens[idx].lower != words[k]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        matched = words.size();
        break;
      }
    }
    if (matched > 0) {
      ann.vague_terms.push_back(
          {i, matched,
           token_span(sentence.text, ann.tokens, i, i + matched - 1)});
      i += matched - 1;
      continue;
    }
    if (lexicon.ambiguity_terms.count(tok.lower))
      ann.vague_terms.push_back({i, 1, tok.text});
  }

  ann.conditional = extract_conditional_clause(ann);
  return ann;
}

SentenceRole classify_sentence(const AnnotatedSentence& annotated,
                               const SentenceContext& context,
                               const Lexicon& lexicon) {
  const auto& tokens = annotated.tokens;

  auto opens_with = [&](const std::set<std::string>& cues) {
    // collect leading word tokens
    std::vector<const std::string*> lead;
    for (const Token& t : tokens) {
      if (t.masked || !t.is_word) continue;
      lead.push_back(&t.lower);
      if (lead.size() == 4) break;
    }
    for (const std::string& cue : cues) {
      std::vector<std::string> words = phrase_words(cue);
      if (words.empty() || words.size() > lead.size()) continue;
      bool ok = true;
      for (size_t k = 0; k < words.size(); ++k)
        if (*lead[k] != words[k]) { ok = false; break; }
      if (ok) return true;
    }
    return false;
  };

  auto contains = [&](const std::set<std::string>& cues) {
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (!tokens[i].is_word || tokens[i].masked) continue;
      for (const std::string& cue : cues) {
        std::vector<std::string> words = phrase_words(cue);
        bool ok = !words.empty();
        size_t idx = i;
        for (size_t k = 0; ok && k < words.size(); ++k, ++idx) {
          while (idx < tokens.size() && !tokens[idx].is_word) ++idx;  // never skip words
          if (idx >= tokens.size() || tokens[idx].masked ||
              tokens[idx].lower != words[k])
            ok = false;
        }
        if (ok) return true;
      }
    }
    return false;
  };

  if (context.side == ListSide::Actions && context.step_index == 1 &&
      context.ordinal == 1 && opens_with(lexicon.precondition_cues))
    return SentenceRole::Precondition;
  if (opens_with(lexicon.verification_cues)) return SentenceRole::Verification;
  if (!annotated.imperative_verbs.empty()) return SentenceRole::Action;
  if (contains(lexicon.verification_cues)) return SentenceRole::Verification;

  switch (context.side) {
    case ListSide::Actions: return SentenceRole::Action;
    case ListSide::Verifications: return SentenceRole::Verification;
    case ListSide::Preconditions: return SentenceRole::Precondition;
  }
  return SentenceRole::Action;
}

std::vector<Clause> split_clauses(const AnnotatedSentence& annotated,
                                  const Lexicon& lexicon) {
  const auto& tokens = annotated.tokens;
  const std::string& text = annotated.source.text;
  std::vector<Clause> out;
  if (tokens.empty()) return out;

  auto clause_for = [&](size_t first, size_t last) {
    Clause c;
    c.first_token = first;
    c.last_token = last;
    c.text = token_span(text, tokens, first, last);
    for (size_t p : annotated.imperative_verbs) {
      if (p >= first && p <= last) {
        if (c.imperative_count == 0) c.lead_verb = tokens[p].lower;
        ++c.imperative_count;
      }
    }
    return c;
  };

  if (annotated.imperative_verbs.size() <= 1) {
    out.push_back(clause_for(0, tokens.size() - 1));
    return out;
  }

  ClauseScan scan = scan_clauses(tokens, lexicon);
  if (scan.splits.empty()) {
    out.push_back(clause_for(0, tokens.size() - 1));
    return out;
  }

  struct Seg { size_t first, last; };
  std::vector<Seg> segs;
  size_t start = 0;
  for (const SplitPoint& sp : scan.splits) {
    if (sp.sep_first > start) segs.push_back({start, sp.sep_first - 1});
    start = std::max(start, sp.sep_first + sp.sep_count);
  }
  if (start <= tokens.size() - 1) segs.push_back({start, tokens.size() - 1});
  if (segs.empty()) {
    out.push_back(clause_for(0, tokens.size() - 1));
    return out;
  }

  auto word_count = [&](const Seg& s) {
    size_t words = 0;
    for (size_t i = s.first; i <= s.last && i < tokens.size(); ++i)
      if (tokens[i].is_word && !tokens[i].masked) ++words;
    return words;
  };
  auto imperative_count = [&](const Seg& s) {
    size_t count = 0;
    for (size_t p : annotated.imperative_verbs)
      if (p >= s.first && p <= s.last) ++count;
    return count;
  };

  // guard: >=1 imperative verb and >=2 words, merge failures into a neighbour
  std::vector<Seg> merged;
  bool pending = false;
  Seg pending_seg{0, 0};
  for (const Seg& seg : segs) {
    Seg cur = seg;
    if (pending) {
      cur.first = pending_seg.first;
      pending = false;
    }
    if (word_count(cur) >= 2 && imperative_count(cur) >= 1) {
      merged.push_back(cur);
    } else if (!merged.empty()) {
      merged.back().last = cur.last;
    } else {
      pending = true;
      pending_seg = cur;
    }
  }
  if (pending) {
    if (!merged.empty()) merged.back().last = pending_seg.last;
    else merged.push_back(pending_seg);
  }

  if (merged.size() <= 1) {
    out.push_back(clause_for(0, tokens.size() - 1));
    return out;
  }
  for (const Seg& seg : merged) out.push_back(clause_for(seg.first, seg.last));
  return out;
}

std::vector<std::string> split_imperative_clauses(const AnnotatedSentence& annotated,
                                                  const Lexicon& lexicon) {
  std::vector<std::string> texts;
  for (const Clause& c : split_clauses(annotated, lexicon)) texts.push_back(c.text);
  return texts;
}

std::vector<TermMatch> find_ambiguous_terms(const AnnotatedSentence& annotated,
                                            const Lexicon& lexicon) {
  (void)lexicon;
  std::vector<TermMatch> matches;
  for (size_t p : annotated.manner_adverbs)
    matches.push_back({p, 1, annotated.tokens[p].text});
  for (const TermMatch& t : annotated.vague_terms) matches.push_back(t);

  std::sort(matches.begin(), matches.end(), [](const TermMatch& a, const TermMatch& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.token_count > b.token_count;
  });
  std::vector<TermMatch> out;
  size_t covered_to = 0;  // first token index not yet covered
  for (const TermMatch& m : matches) {
    if (!out.empty() && m.position < covered_to) continue;
    out.push_back(m);
    covered_to = m.position + m.token_count;
  }
  return out;
}

std::optional<ConditionalSplit> extract_conditional_clause(
    const AnnotatedSentence& annotated) {
  const auto& tokens = annotated.tokens;
  const std::string& text = annotated.source.text;
  if (tokens.empty()) return std::nullopt;

  auto ranges = sentence_ranges(tokens);
  for (size_t r = 0; r < ranges.size(); ++r) {
    auto [first, last] = ranges[r];

    // locate the first marker at bracket depth zero
    int depth = 0;
    size_t marker = tokens.size();
    size_t marker_len = 0;
    size_t first_word = tokens.size();
    for (size_t i = first; i <= last; ++i) {
      const Token& t = tokens[i];
      if (!t.is_word) {
        if (t.text == "(" || t.text == "[") ++depth;
        else if (t.text == ")" || t.text == "]") { if (depth > 0) --depth; }
        continue;
      }
      if (t.masked) continue;
      if (first_word == tokens.size()) first_word = i;
      if (depth != 0) continue;
      if (t.lower == "if") {
        marker = i;
        marker_len = 1;
        break;
      }
      if (t.lower == "in" && i + 1 <= last && tokens[i + 1].is_word &&
          tokens[i + 1].lower == "case") {
        marker = i;
        marker_len = 2;
        break;
      }
    }
    if (marker == tokens.size()) continue;

    // require a word after the marker within the sentence
    size_t after = marker + marker_len;
    bool has_tail = false;
    for (size_t i = after; i <= last; ++i)
      if (tokens[i].is_word) { has_tail = true; break; }
    if (!has_tail) continue;

    size_t content_last = last;
    if (sentence_final(tokens[content_last]) && content_last > first) --content_last;

    std::string clause;
    std::string rem_part;
    if (marker == first_word) {
      // sentence-initial: clause ends at the first depth-zero comma
      int d = 0;
      size_t comma = tokens.size();
      for (size_t i = after; i <= last; ++i) {
        const Token& t = tokens[i];
        if (!t.is_word) {
          if (t.text == "(" || t.text == "[") ++d;
          else if (t.text == ")" || t.text == "]") { if (d > 0) --d; }
          else if (d == 0 && t.text == ",") { comma = i; break; }
        }
      }
      if (comma != tokens.size()) {
        clause = token_span(text, tokens, marker, comma - 1);
        if (comma < last) rem_part = token_span(text, tokens, comma + 1, last);
      } else {
        clause = token_span(text, tokens, marker, content_last);
      }
    } else {
      clause = token_span(text, tokens, marker, content_last);
      size_t p_last = marker - 1;
      while (p_last > first &&
             (is_clause_comma(tokens[p_last]) ||
              (tokens[p_last].is_word &&
               (tokens[p_last].lower == "and" || tokens[p_last].lower == "then"))))
        --p_last;
      if (p_last >= first &&
          !(is_clause_comma(tokens[p_last]) ||
            (tokens[p_last].is_word &&
             (tokens[p_last].lower == "and" || tokens[p_last].lower == "then"))))
        rem_part = token_span(text, tokens, first, p_last);
    }

    // stitch the remainder together with the untouched sentences
    std::string remainder;
    auto append_part = [&](const std::string& part) {
      std::string norm = normalize_whitespace(part);
      if (norm.empty()) return;
      if (!remainder.empty()) remainder += ' ';
      remainder += norm;
    };
    for (size_t k = 0; k < ranges.size(); ++k) {
      if (k == r) append_part(rem_part);
      else append_part(token_span(text, tokens, ranges[k].first, ranges[k].second));
    }

    return ConditionalSplit{normalize_whitespace(clause), remainder};
  }
  return std::nullopt;
}

std::vector<std::string> unhandled_conditional_markers(
    const AnnotatedSentence& annotated) {
  static const std::set<std::string> kMarkers = {"when", "unless", "whenever"};
  const auto& tokens = annotated.tokens;
  std::vector<std::string> found;
  for (auto [first, last] : sentence_ranges(tokens)) {
    for (size_t i = first; i <= last; ++i) {
      const Token& t = tokens[i];
      if (!t.is_word || t.masked || !kMarkers.count(t.lower)) continue;
      bool clause_initial = (i == first) || is_clause_comma(tokens[i - 1]);
      if (clause_initial &&
          std::find(found.begin(), found.end(), t.lower) == found.end())
        found.push_back(t.lower);
    }
  }
  return found;
}

}  // namespace nltest
