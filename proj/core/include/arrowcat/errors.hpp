#ifndef ARROWCAT_ERRORS_HPP
#define ARROWCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrowcat {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class name_not_found : public error {
public:
    explicit name_not_found(const std::string& name)
        : error("unknown name '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class not_an_identity : public error {
public:
    explicit not_an_identity(const std::string& name)
        : error("'" + name + "' is not an identity"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A search or construction would exceed its configured size cap.
class capacity_error : public error {
public:
    using error::error;
};

// Functors/transformations whose sources and targets do not line up.
class wiring_error : public error {
public:
    using error::error;
};

}  // namespace arrowcat

#endif  // ARROWCAT_ERRORS_HPP
