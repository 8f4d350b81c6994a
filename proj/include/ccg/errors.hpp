#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed term, category, or lexicon text. `position` is a byte offset
// into the string handed to the parser.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// normalize() ran out of fuel. Derivation terms are images of simply typed
// terms and must terminate, so this always signals a kernel or lexicon bug
// (e.g. an untypeable LF like self-application).
class NormalizeError : public Error {
public:
  using Error::Error;
};

// A semantic operation was given an LF of the wrong shape, e.g. a functor
// that is not an abstraction where the category promises one.
class RuleError : public Error {
public:
  using Error::Error;
};

// coordinate() descended past the configured depth bound.
class CoordDepthError : public Error {
public:
  using Error::Error;
};

// Problem in a lexicon file; `line` is 1-based.
class LexiconError : public Error {
public:
  LexiconError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Input tokens with no lexical entry.
class UnknownWordError : public Error {
public:
  UnknownWordError(const std::string& what, std::vector<std::string> words)
      : Error(what), words_(std::move(words)) {}
  const std::vector<std::string>& words() const { return words_; }

private:
  std::vector<std::string> words_;
};

}  // namespace ccg
