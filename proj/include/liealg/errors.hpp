#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liealg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed scalar or input text; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class MissingBinding : public Error {
public:
  explicit MissingBinding(const std::string &name)
      : Error("no value bound for '" + name + "'"), name_(name) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

class DomainViolation : public Error {
public:
  explicit DomainViolation(const std::string &constraint)
      : Error("domain constraint violated: " + constraint), constraint_(constraint) {}
  const std::string &constraint() const { return constraint_; }

private:
  std::string constraint_;
};

/// A bracket table that cannot be written in the conformal/minimal shape.
class ShapeViolation : public Error {
public:
  using Error::Error;
};

class NotConformal : public Error {
public:
  explicit NotConformal(const std::string &component)
      : Error("horizontal second fundamental form is not conformal: " + component),
        component_(component) {}
  const std::string &component() const { return component_; }

private:
  std::string component_;
};

} // namespace liealg
