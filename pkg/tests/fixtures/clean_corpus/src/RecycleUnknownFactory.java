public class RecycleUnknownFactory {
    public void build() {
        Widget w = createWidget();
        w.show();
    }
}
