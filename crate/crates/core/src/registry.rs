//! Open-world event registries.
//!
//! [`StringRegistry`] keys listeners by event name and hands them a
//! `&dyn Any` payload. Nothing ties the name used at registration to the name
//! used at trigger time, or the payload type to what a listener expects;
//! mistakes show up as silently skipped listeners or as a
//! [`FaultCode::WrongPayloadType`] fault when a listener [`narrow`]s.
//!
//! [`TypedRegistry`] keys listeners by the identity of the event type itself.
//! A listener for `E` is stored in a list that holds only `E`-listeners, and
//! `trigger::<E>` can only be called with an `E`, so the same mistakes do not
//! type-check.
//!
//! Both registries dispatch over a snapshot of the listener list. A listener
//! that registers more listeners (through shared ownership of the registry)
//! affects later triggers only; use [`TypedRegistry::dispatch`] to release the
//! borrow on the registry before running listeners.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::any::{type_name, Any, TypeId};
use core::cell::RefCell;
use core::fmt;

use crate::fault::{Fault, FaultCode};

/// Listener over a dynamically typed payload.
pub type DynListener = Rc<dyn Fn(&dyn Any) -> Result<(), Fault>>;

/// Checked downcast of a dynamic payload; faults with `WRONG_PAYLOAD_TYPE`.
pub fn narrow<E: Any>(payload: &dyn Any) -> Result<&E, Fault> {
    payload.downcast_ref::<E>().ok_or(Fault::with_detail(FaultCode::WrongPayloadType, type_name::<E>()))
}

#[derive(Default)]
pub struct StringRegistry {
    listeners: BTreeMap<String, Vec<DynListener>>,
}

impl StringRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `listener` under `name`. Any name is accepted.
    pub fn register<F>(&mut self, name: &str, listener: F)
    where
        F: Fn(&dyn Any) -> Result<(), Fault> + 'static,
    {
        self.listeners.entry(name.into()).or_default().push(Rc::new(listener));
    }

    /// Runs every listener under `name` in registration order. Unknown names
    /// are a no-op. The first listener fault aborts dispatch.
    pub fn trigger(&self, name: &str, payload: &dyn Any) -> Result<(), Fault> {
        self.dispatch(name).run(payload)
    }

    /// Snapshot of the listeners currently registered under `name`.
    pub fn dispatch(&self, name: &str) -> StringDispatch {
        StringDispatch { listeners: self.listeners.get(name).cloned().unwrap_or_default() }
    }

    pub fn count(&self, name: &str) -> usize {
        self.listeners.get(name).map_or(0, Vec::len)
    }

    /// Registers a listener that narrows its payload to `E` and appends to
    /// `log`. Returns the listener's index under `name`.
    pub fn register_logger<E: LoggedEvent>(&mut self, name: &str, log: &SharedLog) -> usize {
        let index = self.count(name);
        let log = log.clone();
        let key: String = name.into();
        self.register(name, move |payload| {
            let ev = narrow::<E>(payload)?;
            log.borrow_mut().record(key.clone(), ev.render(), index);
            Ok(())
        });
        index
    }
}

impl fmt::Debug for StringRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.listeners.iter().map(|(k, v)| (k, v.len()))).finish()
    }
}

pub struct StringDispatch {
    listeners: Vec<DynListener>,
}

impl StringDispatch {
    pub fn run(&self, payload: &dyn Any) -> Result<(), Fault> {
        self.listeners.iter().try_for_each(|f| f(payload))
    }

    pub fn len(&self) -> usize {
        self.listeners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.listeners.is_empty()
    }
}

type ListenerVec<E> = Vec<Rc<dyn Fn(&E)>>;

/// Hashable, orderable identity of an event type.
///
/// Computed from the type of the `E`-listener list rather than `E` itself.
/// The two are in bijection, so keys are equal exactly when the event types
/// are.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeKey {
    id: TypeId,
    name: &'static str,
}

impl TypeKey {
    pub fn of<E: 'static>() -> Self {
        TypeKey { id: TypeId::of::<ListenerVec<E>>(), name: type_name::<E>() }
    }

    pub fn type_name(&self) -> &'static str {
        self.name
    }
}

impl fmt::Debug for TypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeKey({})", self.name)
    }
}

#[derive(Default)]
pub struct TypedRegistry {
    listeners: BTreeMap<TypeKey, Box<dyn Any>>,
}

impl TypedRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register<E: 'static, F: Fn(&E) + 'static>(&mut self, listener: F) {
        let erased = self.listeners.entry(TypeKey::of::<E>()).or_insert_with(|| Box::new(ListenerVec::<E>::new()));
        erased
            .downcast_mut::<ListenerVec<E>>()
            .expect("listener list stored under the key of another event type")
            .push(Rc::new(listener));
    }

    /// Runs exactly the `E`-listeners, in registration order.
    pub fn trigger<E: 'static>(&self, ev: &E) {
        self.dispatch::<E>().run(ev)
    }

    /// Snapshot of the `E`-listeners registered so far.
    pub fn dispatch<E: 'static>(&self) -> Dispatch<E> {
        Dispatch { listeners: self.list::<E>().cloned().unwrap_or_default() }
    }

    pub fn count<E: 'static>(&self) -> usize {
        self.list::<E>().map_or(0, Vec::len)
    }

    /// Keys with at least one registered listener list.
    pub fn keys(&self) -> impl Iterator<Item = TypeKey> + '_ {
        self.listeners.keys().copied()
    }

    /// Registers a listener that appends to `log`. Returns its index among the
    /// `E`-listeners.
    pub fn register_logger<E: LoggedEvent>(&mut self, log: &SharedLog) -> usize {
        let index = self.count::<E>();
        let log = log.clone();
        self.register(move |ev: &E| log.borrow_mut().record(E::NAME.into(), ev.render(), index));
        index
    }

    fn list<E: 'static>(&self) -> Option<&ListenerVec<E>> {
        self.listeners.get(&TypeKey::of::<E>()).map(|erased| {
            erased.downcast_ref::<ListenerVec<E>>().expect("listener list stored under the key of another event type")
        })
    }
}

impl fmt::Debug for TypedRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.listeners.keys()).finish()
    }
}

pub struct Dispatch<E> {
    listeners: ListenerVec<E>,
}

impl<E> Dispatch<E> {
    pub fn run(&self, ev: &E) {
        for f in &self.listeners {
            f(ev);
        }
    }

    pub fn len(&self) -> usize {
        self.listeners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.listeners.is_empty()
    }
}

/// An event that can describe itself in an [`InvocationLog`].
pub trait LoggedEvent: 'static {
    const NAME: &'static str;

    fn render(&self) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub event: String,
    pub payload: String,
    pub listener: usize,
}

impl fmt::Display for Invocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.event, self.listener)?;
        if !self.payload.is_empty() {
            write!(f, " {}", self.payload)?;
        }
        Ok(())
    }
}

/// Append-only record of listener invocations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvocationLog {
    entries: Vec<Invocation>,
}

pub type SharedLog = Rc<RefCell<InvocationLog>>;

impl InvocationLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shared() -> SharedLog {
        Rc::new(RefCell::new(Self::new()))
    }

    pub fn record(&mut self, event: String, payload: String, listener: usize) {
        self.entries.push(Invocation { event, payload, listener });
    }

    pub fn entries(&self) -> &[Invocation] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One `<event>#<listener-index> <payload>` line per invocation.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&format!("{entry}\n"));
        }
        out
    }
}

/// Event types used by the demos and tests.
pub mod events {
    use super::LoggedEvent;
    use alloc::format;
    use alloc::string::String;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct OnClick {
        pub mouse_x: usize,
        pub mouse_y: usize,
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct OnKeyPress {
        pub key: char,
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct OnScroll {
        pub delta: i32,
    }

    impl LoggedEvent for OnClick {
        const NAME: &'static str = "OnClick";

        fn render(&self) -> String {
            format!("mouse_x={} mouse_y={}", self.mouse_x, self.mouse_y)
        }
    }

    impl LoggedEvent for OnKeyPress {
        const NAME: &'static str = "OnKeyPress";

        fn render(&self) -> String {
            format!("key={}", self.key)
        }
    }

    impl LoggedEvent for OnScroll {
        const NAME: &'static str = "OnScroll";

        fn render(&self) -> String {
            format!("delta={}", self.delta)
        }
    }
}
