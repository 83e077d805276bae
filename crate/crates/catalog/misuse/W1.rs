// EXPECT: E0061
// Rendering the admin panel without presenting a witness.
use typed_patterns::witness::{render_404, render_admin_panel, Html, User};

fn admin_panel(user: &User) -> Html {
    if let Some(admin) = user.try_admin() {
        return render_admin_panel(admin);
    }
    let _leak = render_admin_panel(); // MISUSE
    render_404()
}

fn main() {
    let _ = admin_panel(&User::new("mallory", false));
}
