#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/term.hpp"

namespace ccg {

// word |-> (category, LF). Words may carry several entries (ambiguity).
struct LexEntry {
  std::string word;  // lowercased token
  Cat cat;
  Term lf;  // closed, beta-normal
};

// Immutable after load; safe for concurrent lookup.
class Lexicon {
public:
  // Validates and normalizes the LF; throws LexiconError (line 0) when the
  // LF is not closed or contains scoped constants.
  void add(LexEntry entry);

  void declare_atom(std::string name);
  const std::set<std::string>& atoms() const { return atoms_; }

  // All entries for a word, in file order; empty if unknown.
  const std::vector<LexEntry>& lookup(std::string_view word) const;
  bool known(std::string_view word) const;

  const std::vector<LexEntry>& entries() const { return order_; }
  std::size_t size() const { return order_.size(); }

  // Re-serialize in the file grammar; load(to_string()) roundtrips.
  std::string to_string() const;

private:
  std::set<std::string> atoms_ = builtin_atoms();
  std::set<std::string> extra_atoms_;  // declared beyond the builtins
  std::vector<LexEntry> order_;
  std::map<std::string, std::vector<LexEntry>, std::less<>> by_word_;
};

// Lexicon file grammar, one entry per line:
//
//   WORD ':=' CAT ':' LF
//
// '#' starts a comment; blank lines are skipped. An optional preamble line
// `atoms: name, name, ...` extends the atomic category set. Errors carry
// 1-based line numbers.
Lexicon load_lexicon(std::string_view text);
Lexicon load_lexicon_file(const std::string& path);

inline const std::vector<LexEntry>& lookup(const Lexicon& lex, std::string_view word) {
  return lex.lookup(word);
}

}  // namespace ccg
