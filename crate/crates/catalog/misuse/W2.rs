// EXPECT: private
// Forging a witness outside the module that owns it.
use typed_patterns::witness::{render_404, render_admin_panel, AdminToken, Html, User};

fn admin_panel(user: &User) -> Html {
    if let Some(admin) = user.try_admin() {
        return render_admin_panel(admin);
    }
    let _leak = render_admin_panel(AdminToken { _private: () }); // MISUSE
    render_404()
}

fn main() {
    let _ = admin_panel(&User::new("mallory", false));
    let _: Option<AdminToken> = None;
}
