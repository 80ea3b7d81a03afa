#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Error categories map to process exit codes in the CLI:
// Usage -> 1, Data -> 2, Transport -> 3.
enum class ErrorKind { Usage, Data, Transport };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define GP_DEFINE_ERROR(Name, Kind)                                    \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what)                         \
            : Error(ErrorKind::Kind, std::string(#Name ": ") + what) {} \
    }

// ingest / windowing
GP_DEFINE_ERROR(SchemaMismatch, Data);
GP_DEFINE_ERROR(EmptyTrace, Data);
GP_DEFINE_ERROR(UnitViolation, Data);
GP_DEFINE_ERROR(TraceTooShort, Data);

// event detection
GP_DEFINE_ERROR(NoValidSamples, Data);

// rendering
GP_DEFINE_ERROR(TooFewSamples, Data);
GP_DEFINE_ERROR(EventWindowMismatch, Data);
GP_DEFINE_ERROR(NoFixations, Data);

// encoding
GP_DEFINE_ERROR(NoEvents, Data);

// prompt assembly
GP_DEFINE_ERROR(ExampleLabelMismatch, Data);

// client
GP_DEFINE_ERROR(AuthError, Transport);
GP_DEFINE_ERROR(RateLimited, Transport);
GP_DEFINE_ERROR(TransportError, Transport);
GP_DEFINE_ERROR(MalformedReply, Transport);
GP_DEFINE_ERROR(ScriptMiss, Data);

// experiment planning
GP_DEFINE_ERROR(PoolTooLarge, Data);
GP_DEFINE_ERROR(InsufficientData, Data);

// configuration / CLI
GP_DEFINE_ERROR(ConfigError, Usage);

#undef GP_DEFINE_ERROR

}  // namespace gp
