#pragma once

// Command output: human-readable lines interleaved with tagged rows.
//
// Text mode prints lines as given and aligns each run of rows sharing a tag
// into columns. Rows mode prints only the rows, tab-separated, each led by its
// tag, bracketed by a "command" row and an "exit" row.

#include <ostream>
#include <string>
#include <vector>

namespace ualg {

  enum ExitCode : int {
    kHolds          = 0,
    kCounterexample = 1,
    kUsage          = 2,
    kResource       = 3,
  };

  class Report {
   public:
    explicit Report(std::string command) : _command(std::move(command)) {}

    void line(std::string text = {});
    void section(std::string const& title);
    void row(std::string tag, std::vector<std::string> fields);

    // Downgrades only: once a counterexample or error is recorded, a later
    // positive result cannot hide it.
    void set_exit(ExitCode code);
    int  exit_code() const noexcept {
      return _exit;
    }

    std::string const& command() const noexcept {
      return _command;
    }

    void render_text(std::ostream& out) const;
    void render_rows(std::ostream& out) const;

   private:
    struct Entry {
      bool                     is_row = false;
      std::string              tag;
      std::vector<std::string> fields;  // text lines: fields[0]
    };
    std::string        _command;
    std::vector<Entry> _entries;
    int                _exit = kHolds;
  };

}  // namespace ualg
