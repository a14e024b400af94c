//! Time-synchronous simulator.
//!
//! Execution proceeds in global ticks over an instantiated component
//! tree. Each tick has three sub-phases: PROPAGATE copies every
//! connector's source value (as committed in the previous tick) to its
//! target after the environment wrote the main inputs; COMPUTE runs every
//! atomic instance's behavior against its freshly propagated inputs and
//! variables, buffering effects; COMMIT applies all buffered effects at
//! once. Connectors therefore impose exactly one tick of delay, ports
//! hold their last value until rewritten, and the trace is independent of
//! the order instances compute in.

pub mod engine;
pub mod error;
pub mod instance;
pub mod scenario;
pub mod trace;

pub use engine::{run, tick, RunOutcome, SystemState};
pub use error::SimError;
pub use instance::{instantiate, Instance, InstanceKind, InstanceTree, PortDesc, ValueType};
pub use scenario::{load_scenario, parse_scenario, Scenario};
pub use trace::Trace;

pub mod codes {
    /// Atomic instance without a behavior.
    pub const SIM0001: &str = "SIM0001";
    /// Scenario header does not match the main component's input ports.
    pub const SIM0002: &str = "SIM0002";
    /// Scenario value does not parse as the port's type.
    pub const SIM0003: &str = "SIM0003";
    /// A guard or effect read a value that is absent.
    pub const SIM0004: &str = "SIM0004";
    /// Division by zero during simulation.
    pub const SIM0005: &str = "SIM0005";
}
