public class RecycleCursorClosed {
    public void readAll(SQLiteDatabase db) {
        Cursor c = db.query("items", null, null, null, null, null, null);
        while (c.moveToNext()) {
            handle(c.getString(0));
        }
        c.close();
    }
}
