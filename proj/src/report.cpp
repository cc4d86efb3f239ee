#include "ualg/report.hpp"

#include <algorithm>

namespace ualg {

  void Report::line(std::string text) {
    _entries.push_back({false, {}, {std::move(text)}});
  }

  void Report::section(std::string const& title) {
    if (!_entries.empty()) {
      line();
    }
    line("== " + title + " ==");
  }

  void Report::row(std::string tag, std::vector<std::string> fields) {
    _entries.push_back({true, std::move(tag), std::move(fields)});
  }

  void Report::set_exit(ExitCode code) {
    _exit = std::max(_exit, static_cast<int>(code));
  }

  void Report::render_text(std::ostream& out) const {
    std::size_t i = 0;
    while (i < _entries.size()) {
      auto const& e = _entries[i];
      if (!e.is_row) {
        out << e.fields[0] << '\n';
        ++i;
        continue;
      }
      std::size_t j = i;
      std::vector<std::size_t> width;
      while (j < _entries.size() && _entries[j].is_row
             && _entries[j].tag == e.tag) {
        auto const& f = _entries[j].fields;
        width.resize(std::max(width.size(), f.size()), 0);
        for (std::size_t k = 0; k < f.size(); ++k) {
          width[k] = std::max(width[k], f[k].size());
        }
        ++j;
      }
      for (; i < j; ++i) {
        auto const& f = _entries[i].fields;
        std::string s = "  ";
        for (std::size_t k = 0; k < f.size(); ++k) {
          s += f[k];
          if (k + 1 < f.size()) {
            s += std::string(width[k] - f[k].size() + 2, ' ');
          }
        }
        out << s << '\n';
      }
    }
  }

  void Report::render_rows(std::ostream& out) const {
    out << "command\t" << _command << '\n';
    for (auto const& e : _entries) {
      if (!e.is_row) {
        continue;
      }
      out << e.tag;
      for (auto const& f : e.fields) {
        out << '\t' << f;
      }
      out << '\n';
    }
    out << "exit\t" << _exit << '\n';
  }

}  // namespace ualg
