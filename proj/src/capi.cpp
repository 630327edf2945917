#include "plurind.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "report.hpp"

struct plurind_system {
  plurind::SystemFile file;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_errmsg(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

plurind_status from_code(plurind::ErrorCode code) {
  switch (code) {
    case plurind::ErrorCode::Parse:
      return PLURIND_PARSE_ERROR;
    case plurind::ErrorCode::Degenerate:
      return PLURIND_DEGENERATE;
    case plurind::ErrorCode::Dimension:
      return PLURIND_DIMENSION;
    case plurind::ErrorCode::Invalid:
      return PLURIND_INVALID;
    case plurind::ErrorCode::Numeric:
      return PLURIND_NUMERIC;
  }
  return PLURIND_INVALID;
}

template <class Fn>
plurind_status guarded(char** errmsg, Fn&& fn) {
  if (errmsg) *errmsg = nullptr;
  try {
    return fn();
  } catch (const plurind::Error& e) {
    set_errmsg(errmsg, e.what());
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    set_errmsg(errmsg, "out of memory");
    return PLURIND_NUMERIC;
  } catch (const std::exception& e) {
    set_errmsg(errmsg, e.what());
    return PLURIND_INVALID;
  }
}

plurind_status emit(char** json_out, const nlohmann::json& j) {
  if (!json_out) return PLURIND_INVALID;
  *json_out = dup_string(plurind::to_string(j));
  return *json_out ? PLURIND_OK : PLURIND_NUMERIC;
}

}  // namespace

extern "C" {

plurind_status plurind_system_parse(const char* text, plurind_system** out,
                                    char** errmsg) {
  if (out) *out = nullptr;
  if (!text || !out) {
    set_errmsg(errmsg, "null argument");
    return PLURIND_INVALID;
  }
  return guarded(errmsg, [&] {
    auto* sys = new plurind_system{plurind::parse_system(text)};
    *out = sys;
    return PLURIND_OK;
  });
}

void plurind_system_free(plurind_system* sys) { delete sys; }

void plurind_string_free(char* str) { ::free(str); }

int plurind_system_dimension(const plurind_system* sys) {
  return sys ? sys->file.dimension() : 0;
}

plurind_status plurind_system_set_basepoint(plurind_system* sys,
                                            const char* point_text,
                                            char** errmsg) {
  if (!sys || !point_text) {
    set_errmsg(errmsg, "null argument");
    return PLURIND_INVALID;
  }
  return guarded(errmsg, [&] {
    sys->file.basepoint =
        plurind::parse_point(point_text, sys->file.dimension());
    return PLURIND_OK;
  });
}

plurind_status plurind_system_set_name(plurind_system* sys, const char* name) {
  if (!sys || !name) return PLURIND_INVALID;
  sys->file.name = name;
  return PLURIND_OK;
}

plurind_status plurind_report_indicator(const plurind_system* sys,
                                        char** json_out, char** errmsg) {
  if (!sys) return PLURIND_INVALID;
  return guarded(errmsg, [&] {
    return emit(json_out, plurind::indicator_report(sys->file));
  });
}

plurind_status plurind_report_newton(const plurind_system* sys,
                                     char** json_out, char** errmsg) {
  if (!sys) return PLURIND_INVALID;
  return guarded(errmsg, [&] {
    return emit(json_out, plurind::newton_report(sys->file));
  });
}

plurind_status plurind_report_bounds(const plurind_system* sys,
                                     const char* directions, char** json_out,
                                     char** errmsg) {
  if (!sys) return PLURIND_INVALID;
  return guarded(errmsg, [&] {
    std::vector<plurind::QVec> dirs;
    if (directions && *directions) {
      std::string text(directions);
      size_t start = 0;
      while (start <= text.size()) {
        size_t end = text.find(';', start);
        std::string part = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        if (!part.empty()) {
          plurind::QVec a;
          size_t p = 0;
          while (p <= part.size()) {
            size_t comma = part.find(',', p);
            std::string item = part.substr(
                p, comma == std::string::npos ? std::string::npos : comma - p);
            // Trim blanks.
            while (!item.empty() && item.front() == ' ') item.erase(item.begin());
            while (!item.empty() && item.back() == ' ') item.pop_back();
            if (!item.empty()) a.push_back(plurind::parse_rational(item));
            if (comma == std::string::npos) break;
            p = comma + 1;
          }
          dirs.push_back(std::move(a));
        }
        if (end == std::string::npos) break;
        start = end + 1;
      }
    }
    return emit(json_out, plurind::bounds_report(sys->file, dirs));
  });
}

plurind_status plurind_report_zeros(const plurind_system* sys, char** json_out,
                                    char** errmsg) {
  if (!sys) return PLURIND_INVALID;
  return guarded(errmsg, [&] {
    return emit(json_out, plurind::zeros_report(sys->file));
  });
}

plurind_status plurind_report_verify(const plurind_system* sys,
                                     int* violations, char** json_out,
                                     char** errmsg) {
  if (!sys) return PLURIND_INVALID;
  if (violations) *violations = 0;
  return guarded(errmsg, [&] {
    plurind::VerifyOptions opts;
    nlohmann::json report = plurind::verify_report(sys->file, opts);
    int bad = report["verify"]["violations"].get<int>();
    if (violations) *violations = bad;
    if (json_out) {
      plurind_status s = emit(json_out, report);
      if (s != PLURIND_OK) return s;
    }
    return bad > 0 ? PLURIND_VIOLATION : PLURIND_OK;
  });
}

plurind_status plurind_render_newton_svg(const plurind_system* sys,
                                         char** svg_out, char** errmsg) {
  if (!sys || !svg_out) return PLURIND_INVALID;
  return guarded(errmsg, [&] {
    *svg_out = dup_string(plurind::render_newton_svg(sys->file));
    return *svg_out ? PLURIND_OK : PLURIND_NUMERIC;
  });
}

const char* plurind_status_name(plurind_status status) {
  switch (status) {
    case PLURIND_OK:
      return "ok";
    case PLURIND_VIOLATION:
      return "inequality violation";
    case PLURIND_PARSE_ERROR:
      return "parse error";
    case PLURIND_DEGENERATE:
      return "degenerate input";
    case PLURIND_DIMENSION:
      return "unsupported dimension";
    case PLURIND_INVALID:
      return "invalid argument";
    case PLURIND_NUMERIC:
      return "numeric failure";
  }
  return "unknown";
}

const char* plurind_version(void) { return "1.0.0"; }

}  // extern "C"
