#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace disckit {

// Error taxonomy. Every failure mode in the library maps onto one of these;
// the CLI translates them into structured stderr lines and exit code 1.
enum class errc {
  ingest,
  format,
  stat,
  no_separation,
  fit,
  domain,
  prediction,
  synth,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ingest: return "IngestError";
    case errc::format: return "FormatError";
    case errc::stat: return "StatError";
    case errc::no_separation: return "NoSeparation";
    case errc::fit: return "FitError";
    case errc::domain: return "DomainError";
    case errc::prediction: return "PredictionError";
    case errc::synth: return "SynthError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class IngestError : public Error {
 public:
  explicit IngestError(const std::string& msg) : Error(errc::ingest, msg) {}
};

// File-level parse/encode failures; carries the byte offset where the
// problem was detected when that is meaningful.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg,
                       std::optional<std::uint64_t> byte_offset = std::nullopt)
      : Error(errc::format, byte_offset
                                ? msg + " (byte offset " + std::to_string(*byte_offset) + ")"
                                : msg),
        byte_offset_(byte_offset) {}

  std::optional<std::uint64_t> byte_offset() const noexcept { return byte_offset_; }

 private:
  std::optional<std::uint64_t> byte_offset_;
};

class StatError : public Error {
 public:
  explicit StatError(const std::string& msg) : Error(errc::stat, msg) {}
};

class NoSeparationError : public Error {
 public:
  explicit NoSeparationError(const std::string& msg) : Error(errc::no_separation, msg) {}
};

class FitError : public Error {
 public:
  explicit FitError(const std::string& msg) : Error(errc::fit, msg) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(errc::domain, msg) {}
};

class PredictionError : public Error {
 public:
  explicit PredictionError(const std::string& msg) : Error(errc::prediction, msg) {}
};

class SynthError : public Error {
 public:
  explicit SynthError(const std::string& msg) : Error(errc::synth, msg) {}
};

}  // namespace disckit
