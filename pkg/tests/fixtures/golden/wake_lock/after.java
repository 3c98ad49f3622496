public class ActivityWithWakelock extends Activity {
    private WakeLock wl;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);

        PowerManager pm = (PowerManager) this.getSystemService(
            Context.POWER_SERVICE
        );
        wl = pm.newWakeLock(
            PowerManager.SCREEN_DIM_WAKE_LOCK | PowerManager.ON_AFTER_RELEASE,
            "WakeLockSample"
        );
        wl.acquire();
    }

    @Override
    protected void onPause() {
        super.onPause();
        if (wl != null && wl.isHeld()) {
            wl.release();
        }
    }
}
