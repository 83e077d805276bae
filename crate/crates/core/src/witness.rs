//! Access control with a witness token.
//!
//! [`render_admin_panel`] takes an [`AdminToken`] by value. The token has a
//! private field and no public constructor, so the only way to get one is
//! [`User::try_admin`], and the only way to call the renderer is on a path
//! where that check succeeded.
//!
//! The token proves that *some* admin was checked in this control flow, not
//! which one: tokens carry no user identity and are interchangeable.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct User {
    pub name: String,
    pub admin: bool,
}

impl User {
    pub fn new(name: impl Into<String>, admin: bool) -> Self {
        User { name: name.into(), admin }
    }

    /// The only constructor of [`AdminToken`].
    pub fn try_admin(&self) -> Option<AdminToken> {
        if is_admin(self) {
            Some(AdminToken { _private: () })
        } else {
            None
        }
    }
}

/// The boolean check the token is built on. Routing on this flag alone
/// compiles whether or not it is consulted.
pub fn is_admin(user: &User) -> bool {
    user.admin
}

/// Proof that an admin check succeeded. Deliberately neither `Clone` nor
/// `Default`.
#[derive(Debug, PartialEq, Eq)]
pub struct AdminToken {
    _private: (),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Html {
    pub body: String,
}

pub const ADMIN_PANEL_BODY: &str = "<h1>ADMIN PANEL</h1>";
pub const NOT_FOUND_BODY: &str = "<h1>404 Not Found</h1>";

pub fn render_admin_panel(_admin: AdminToken) -> Html {
    Html { body: ADMIN_PANEL_BODY.into() }
}

pub fn render_404() -> Html {
    Html { body: NOT_FOUND_BODY.into() }
}

pub fn route_admin_panel(user: &User) -> Html {
    match user.try_admin() {
        Some(admin) => render_admin_panel(admin),
        None => render_404(),
    }
}

/// The fixed user store behind the `admin` CLI command.
pub fn fixture_users() -> [User; 2] {
    [User::new("alice", true), User::new("bob", false)]
}

pub fn find_fixture_user(name: &str) -> Option<User> {
    fixture_users().into_iter().find(|u| u.name == name)
}
