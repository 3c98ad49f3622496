public class RecycleReleased {
    public void styled(AttributeSet attrs, int defStyle) {
        final TypedArray a = getContext().obtainStyledAttributes(
            attrs, new int[] { 0 }, defStyle, 0
        );
        String example = a.getString(0);
        a.recycle();
    }
}
